#include "carlitz/ratfunc.hpp"

#include "carlitz/errors.hpp"

namespace carlitz {

RatFunc rf_make(const Fq& F, FqPoly num, FqPoly den) {
    if (den.is_zero()) throw domain_error("rational function with zero denominator");
    if (num.is_zero()) return RatFunc{};
    FqPoly g = fp_gcd(F, num, den);
    if (g.deg() > 0) {
        num = fp_div_exact(F, num, g);
        den = fp_div_exact(F, den, g);
    }
    if (den.lead() != 1) {
        FqElem s = F.inv(den.lead());
        den = fp_scale(F, den, s);
        num = fp_scale(F, num, s);
    }
    return RatFunc{std::move(num), std::move(den)};
}

RatFunc rf_from_poly(FqPoly p) { return RatFunc{std::move(p), fp_one()}; }
RatFunc rf_one() { return rf_from_poly(fp_one()); }
RatFunc rf_zero() { return RatFunc{}; }

RatFunc rf_add(const Fq& F, const RatFunc& a, const RatFunc& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den == b.den)
        return rf_make(F, fp_add(F, a.num, b.num), a.den);
    FqPoly num = fp_add(F, fp_mul(F, a.num, b.den), fp_mul(F, b.num, a.den));
    return rf_make(F, std::move(num), fp_mul(F, a.den, b.den));
}

RatFunc rf_neg(const Fq& F, const RatFunc& a) {
    return RatFunc{fp_neg(F, a.num), a.den};
}

RatFunc rf_sub(const Fq& F, const RatFunc& a, const RatFunc& b) {
    return rf_add(F, a, rf_neg(F, b));
}

RatFunc rf_mul(const Fq& F, const RatFunc& a, const RatFunc& b) {
    if (a.is_zero() || b.is_zero()) return RatFunc{};
    return rf_make(F, fp_mul(F, a.num, b.num), fp_mul(F, a.den, b.den));
}

RatFunc rf_inv(const Fq& F, const RatFunc& a) {
    if (a.is_zero()) throw domain_error("inverse of zero rational function");
    return rf_make(F, a.den, a.num);
}

RatFunc rf_div(const Fq& F, const RatFunc& a, const RatFunc& b) {
    return rf_mul(F, a, rf_inv(F, b));
}

RatFunc rf_pow_q(const Fq& F, const RatFunc& a, int j) {
    return RatFunc{fp_pow_q(F, a.num, j), fp_pow_q(F, a.den, j)};
}

bool rf_eq(const Fq& F, const RatFunc& a, const RatFunc& b) {
    return fp_mul(F, a.num, b.den) == fp_mul(F, b.num, a.den);
}

std::int64_t rf_xorder(const RatFunc& a) {
    if (a.is_zero()) throw domain_error("x-order of zero");
    return fp_xorder(a.num) - fp_xorder(a.den);
}

RatFunc rf_eval_poly(const Fq& F, const RatFunc& a, const FqPoly& t) {
    FqPoly den = fp_eval_poly(F, a.den, t);
    if (den.is_zero()) throw domain_error("denominator vanishes at evaluation point");
    return rf_make(F, fp_eval_poly(F, a.num, t), std::move(den));
}

} // namespace carlitz
