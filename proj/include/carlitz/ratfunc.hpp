#ifndef CARLITZ_RATFUNC_HPP
#define CARLITZ_RATFUNC_HPP

#include "carlitz/fqpoly.hpp"

namespace carlitz {

/// Rational function over GF(q): num/den with gcd(num, den) = 1 and den
/// monic. Zero is (0, 1).
struct RatFunc {
    FqPoly num;
    FqPoly den = fp_one();

    bool is_zero() const { return num.is_zero(); }
    bool is_polynomial() const { return den.deg() == 0; }
};

RatFunc rf_make(const Fq& F, FqPoly num, FqPoly den);
RatFunc rf_from_poly(FqPoly p);
RatFunc rf_one();
RatFunc rf_zero();

RatFunc rf_add(const Fq& F, const RatFunc& a, const RatFunc& b);
RatFunc rf_sub(const Fq& F, const RatFunc& a, const RatFunc& b);
RatFunc rf_neg(const Fq& F, const RatFunc& a);
RatFunc rf_mul(const Fq& F, const RatFunc& a, const RatFunc& b);
RatFunc rf_div(const Fq& F, const RatFunc& a, const RatFunc& b);
RatFunc rf_inv(const Fq& F, const RatFunc& a);
/// a^(q^j): exponent scaling of both parts.
RatFunc rf_pow_q(const Fq& F, const RatFunc& a, int j);

bool rf_eq(const Fq& F, const RatFunc& a, const RatFunc& b);

/// v(num) - v(den); throws on zero.
std::int64_t rf_xorder(const RatFunc& a);

/// Evaluate at a polynomial point; throws if the denominator vanishes there.
RatFunc rf_eval_poly(const Fq& F, const RatFunc& a, const FqPoly& t);

} // namespace carlitz

#endif
