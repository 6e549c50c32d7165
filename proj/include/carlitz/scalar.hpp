#ifndef CARLITZ_SCALAR_HPP
#define CARLITZ_SCALAR_HPP

#include <variant>

#include "carlitz/laurent.hpp"

namespace carlitz {

/// Exact scalar with ramification: the rational function r evaluated at
/// u = x^(1/denom). denom is a power of q. q-th roots and powers act by
/// exponent scaling, so the whole ladder algebra stays exact here.
struct RamRat {
    std::int64_t denom = 1;
    RatFunc r;

    bool is_zero() const { return r.is_zero(); }
};

RamRat rr_from_ratfunc(RatFunc r);
RamRat rr_from_poly(FqPoly p);
RamRat rr_zero();
RamRat rr_one();

RamRat rr_normalize(const Fq& F, RamRat a);
RamRat rr_add(const Fq& F, const RamRat& a, const RamRat& b);
RamRat rr_sub(const Fq& F, const RamRat& a, const RamRat& b);
RamRat rr_neg(const Fq& F, const RamRat& a);
RamRat rr_mul(const Fq& F, const RamRat& a, const RamRat& b);
RamRat rr_div(const Fq& F, const RamRat& a, const RamRat& b);
RamRat rr_frobenius(const Fq& F, const RamRat& a);
RamRat rr_qth_root(const Fq& F, const RamRat& a, std::int64_t ram_cap);
bool rr_eq(const Fq& F, const RamRat& a, const RamRat& b);
AbsVal rr_abs(const RamRat& a);
/// Series expansion; prec in units of x^(1/a.denom); result keeps a.denom.
LaurentSeries rr_to_laurent(const Fq& F, const RamRat& a, std::int64_t prec);

/// Scalar of the coefficient field: exact where possible, truncated series
/// once an operand is analytic. Promotion is automatic and one-way.
using Scalar = std::variant<RamRat, LaurentSeries>;

struct ScalarEq {
    bool equal = false;
    bool exact = false;   ///< equality decided exactly (both operands exact)
    std::int64_t prec_num = 0;
    std::int64_t prec_den = 1;
};

Scalar sc_from_poly(FqPoly p);
Scalar sc_from_ratfunc(RatFunc r);
Scalar sc_from_int(const Fq& F, std::int64_t v);
Scalar sc_zero();

bool sc_is_exact(const Scalar& a);
bool sc_is_zero(const Scalar& a);

Scalar sc_add(const Fq& F, const Scalar& a, const Scalar& b);
Scalar sc_sub(const Fq& F, const Scalar& a, const Scalar& b);
Scalar sc_neg(const Fq& F, const Scalar& a);
Scalar sc_mul(const Fq& F, const Scalar& a, const Scalar& b);
Scalar sc_frobenius(const Fq& F, const Scalar& a);
/// a^(q^n)
Scalar sc_pow_q(const Fq& F, const Scalar& a, int n);
Scalar sc_qth_root(const Fq& F, const Scalar& a, std::int64_t ram_cap);
AbsVal sc_abs(const Scalar& a);
ScalarEq sc_eq(const Fq& F, const Scalar& a, const Scalar& b);
/// Promote to a series at the given precision (units of x^(1/denom_hint)
/// where denom_hint must be a multiple of the scalar's own denominator).
LaurentSeries sc_to_laurent(const Fq& F, const Scalar& a, std::int64_t prec,
                            std::int64_t denom_hint = 1);

} // namespace carlitz

#endif
