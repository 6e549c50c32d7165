#ifndef CARLITZ_TPOLY_HPP
#define CARLITZ_TPOLY_HPP

#include "carlitz/ratfunc.hpp"

namespace carlitz {

/// Dense polynomial in t with GF(q)[x] coefficients (coeff[k] * t^k).
struct PolyFq {
    std::vector<FqPoly> c;

    std::int64_t deg() const;
    void trim();
    bool is_zero() const { return deg() < 0; }
};

/// Dense polynomial in t with rational-function coefficients.
struct PolyRat {
    std::vector<RatFunc> c;

    std::int64_t deg() const;
    void trim();
};

PolyFq tp_one();
/// t - m
PolyFq tp_linear_root(const Fq& F, const FqPoly& m);
PolyFq tp_mul(const Fq& F, const PolyFq& a, const PolyFq& b);
PolyFq tp_pow(const Fq& F, const PolyFq& a, std::uint64_t e);
FqPoly tp_eval(const Fq& F, const PolyFq& a, const FqPoly& t);

PolyRat tr_from_fq(const PolyFq& a);
/// Divide every coefficient by g.
PolyRat tr_scale_div(const Fq& F, const PolyFq& a, const FqPoly& g);
RatFunc tr_eval(const Fq& F, const PolyRat& a, const FqPoly& t);

} // namespace carlitz

#endif
