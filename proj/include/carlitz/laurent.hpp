#ifndef CARLITZ_LAURENT_HPP
#define CARLITZ_LAURENT_HPP

#include <cstdint>
#include <optional>

#include "carlitz/ratfunc.hpp"

namespace carlitz {

/// Absolute value |z| = q^(-num/den) in lowest terms (den >= 1).
/// `zero` marks a value indistinguishable from 0: for an exact zero
/// `bound` is absent, otherwise |z| <= q^(-bound.num/bound.den).
struct AbsVal {
    bool zero = false;
    std::int64_t num = 0;
    std::int64_t den = 1;
    std::optional<std::pair<std::int64_t, std::int64_t>> bound;
};

/// -1 if |a| < |b|, 0 if equal, +1 if |a| > |b|. A zero AbsVal compares
/// as strictly smaller than any nonzero one.
int av_cmp(const AbsVal& a, const AbsVal& b);
/// Compare |a| against q^(-num/den).
int av_cmp_exp(const AbsVal& a, std::int64_t num, std::int64_t den);

/// Truncated Laurent series in x^(1/denom) over GF(q).
///
/// z = sum_{e=val}^{prec-1} coeff[e-val] * x^(e/denom) + O(x^(prec/denom)).
/// Invariants: denom is a power of q; val + coeff.size() == prec; the leading
/// stored coefficient is nonzero unless the series is zero at its precision
/// (empty coeff, val == prec).
struct LaurentSeries {
    std::int64_t denom = 1;
    std::int64_t val = 0;
    std::vector<FqElem> c;
    std::int64_t prec = 0;

    bool is_zero() const { return c.empty(); }
    FqElem at(std::int64_t e) const {
        return (e >= val && e < val + std::int64_t(c.size())) ? c[std::size_t(e - val)]
                                                              : FqElem(0);
    }
};

/// Result of an equality test at the common precision.
struct EqAtPrec {
    bool equal = false;
    std::int64_t prec_num = 0; ///< compared modulo x^(prec_num/prec_den)
    std::int64_t prec_den = 1;
};

LaurentSeries ls_zero(std::int64_t prec, std::int64_t denom = 1);
/// Normalize raw parts (strips leading zeros into val, trims to prec).
LaurentSeries ls_make(std::int64_t denom, std::int64_t val, std::vector<FqElem> coeffs,
                      std::int64_t prec);
LaurentSeries ls_from_poly(const FqPoly& p, std::int64_t prec);
/// x^(vnum/vden) at the given precision (exponent in units of 1/vden).
LaurentSeries ls_monomial(FqElem a, std::int64_t vnum, std::int64_t vden, std::int64_t prec);

/// Laurent expansion of num/den at x = 0 modulo x^prec (denom = 1).
LaurentSeries ls_from_ratfunc(const Fq& F, const RatFunc& r, std::int64_t prec);

LaurentSeries ls_add(const Fq& F, const LaurentSeries& a, const LaurentSeries& b);
LaurentSeries ls_sub(const Fq& F, const LaurentSeries& a, const LaurentSeries& b);
LaurentSeries ls_neg(const Fq& F, const LaurentSeries& a);
LaurentSeries ls_mul(const Fq& F, const LaurentSeries& a, const LaurentSeries& b);
LaurentSeries ls_scale(const Fq& F, const LaurentSeries& a, FqElem s);
LaurentSeries ls_inv(const Fq& F, const LaurentSeries& a);
/// Truncate to precision at most p (in units of 1/denom).
LaurentSeries ls_truncate(const LaurentSeries& a, std::int64_t p);

AbsVal ls_abs(const LaurentSeries& a);

/// z^q: exponent scaling; coefficients are Frobenius-fixed.
LaurentSeries ls_frobenius(const Fq& F, const LaurentSeries& a);
/// w with w^q = z. Multiplies the ramification denominator by q (then
/// reduces); throws domain_error past ram_cap.
LaurentSeries ls_qth_root(const Fq& F, const LaurentSeries& a, std::int64_t ram_cap);

/// Rescale to a denominator that is a multiple of the current one.
LaurentSeries ls_with_denom(const LaurentSeries& a, std::int64_t denom);

EqAtPrec ls_eq(const Fq& F, const LaurentSeries& a, const LaurentSeries& b);

} // namespace carlitz

#endif
