#ifndef CARLITZ_FQPOLY_HPP
#define CARLITZ_FQPOLY_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "carlitz/fq.hpp"

namespace carlitz {

/// Polynomial over GF(q), coefficients low degree first, no trailing zeros.
/// The zero polynomial is the empty list.
struct FqPoly {
    std::vector<FqElem> c;

    FqPoly() = default;
    explicit FqPoly(std::vector<FqElem> coeffs) : c(std::move(coeffs)) { trim(); }

    bool is_zero() const { return c.empty(); }
    std::int64_t deg() const { return std::int64_t(c.size()) - 1; }
    FqElem lead() const { return c.empty() ? FqElem(0) : c.back(); }
    FqElem at(std::int64_t k) const {
        return (k >= 0 && k < std::int64_t(c.size())) ? c[std::size_t(k)] : FqElem(0);
    }
    void trim() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }
    bool operator==(const FqPoly& o) const { return c == o.c; }
};

/// Degree ceiling for any single polynomial; configurations that would
/// exceed it (e.g. brackets past the cache budget) fail cleanly.
inline constexpr std::int64_t kMaxPolyDegree = std::int64_t(1) << 24;

FqPoly fp_zero();
FqPoly fp_const(FqElem a);
FqPoly fp_one();
/// a * x^k
FqPoly fp_monomial(FqElem a, std::int64_t k);

FqPoly fp_add(const Fq& F, const FqPoly& a, const FqPoly& b);
FqPoly fp_sub(const Fq& F, const FqPoly& a, const FqPoly& b);
FqPoly fp_neg(const Fq& F, const FqPoly& a);
FqPoly fp_mul(const Fq& F, const FqPoly& a, const FqPoly& b);
FqPoly fp_scale(const Fq& F, const FqPoly& a, FqElem s);
/// a * x^k, k >= 0
FqPoly fp_shift(const FqPoly& a, std::int64_t k);
/// a^(q^j): exponent scaling, since every coefficient is fixed by x -> x^q.
FqPoly fp_pow_q(const Fq& F, const FqPoly& a, int j);
FqPoly fp_pow(const Fq& F, const FqPoly& a, std::uint64_t e);

/// Quotient and remainder with deg(rem) < deg(b). Throws on zero divisor.
std::pair<FqPoly, FqPoly> fp_divrem(const Fq& F, const FqPoly& a, const FqPoly& b);
/// Exact quotient; throws internal_error if the division leaves a remainder.
FqPoly fp_div_exact(const Fq& F, const FqPoly& a, const FqPoly& b);
/// Monic gcd (zero for gcd(0,0)).
FqPoly fp_gcd(const Fq& F, FqPoly a, FqPoly b);
FqPoly fp_make_monic(const Fq& F, const FqPoly& a);

FqElem fp_eval(const Fq& F, const FqPoly& a, FqElem t);
/// Substitute a polynomial argument.
FqPoly fp_eval_poly(const Fq& F, const FqPoly& a, const FqPoly& t);

/// Index of the lowest nonzero coefficient; -1 for the zero polynomial.
std::int64_t fp_xorder(const FqPoly& a);

/// dst[k] = dst[k] + c*src[k] for k < n; the bulk kernel behind mul/divrem.
/// Specialized per characteristic so hot paths vectorize.
void fp_axpy(const Fq& F, FqElem* dst, const FqElem* src, std::size_t n, FqElem c);

} // namespace carlitz

#endif
