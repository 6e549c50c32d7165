#include "carlitz/tpoly.hpp"

namespace carlitz {

std::int64_t PolyFq::deg() const {
    for (std::size_t k = c.size(); k-- > 0;)
        if (!c[k].is_zero()) return std::int64_t(k);
    return -1;
}

void PolyFq::trim() { c.resize(std::size_t(deg() + 1)); }

std::int64_t PolyRat::deg() const {
    for (std::size_t k = c.size(); k-- > 0;)
        if (!c[k].is_zero()) return std::int64_t(k);
    return -1;
}

void PolyRat::trim() { c.resize(std::size_t(deg() + 1)); }

PolyFq tp_one() { return PolyFq{{fp_one()}}; }

PolyFq tp_linear_root(const Fq& F, const FqPoly& m) {
    return PolyFq{{fp_neg(F, m), fp_one()}};
}

PolyFq tp_mul(const Fq& F, const PolyFq& a, const PolyFq& b) {
    if (a.is_zero() || b.is_zero()) return PolyFq{};
    PolyFq r;
    r.c.assign(a.c.size() + b.c.size() - 1, FqPoly());
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c.size(); ++j) {
            if (b.c[j].is_zero()) continue;
            r.c[i + j] = fp_add(F, r.c[i + j], fp_mul(F, a.c[i], b.c[j]));
        }
    }
    r.trim();
    return r;
}

PolyFq tp_pow(const Fq& F, const PolyFq& a, std::uint64_t e) {
    PolyFq r = tp_one();
    PolyFq base = a;
    while (e) {
        if (e & 1) r = tp_mul(F, r, base);
        e >>= 1;
        if (e) base = tp_mul(F, base, base);
    }
    return r;
}

FqPoly tp_eval(const Fq& F, const PolyFq& a, const FqPoly& t) {
    FqPoly r;
    for (std::size_t k = a.c.size(); k-- > 0;)
        r = fp_add(F, fp_mul(F, r, t), a.c[k]);
    return r;
}

PolyRat tr_from_fq(const PolyFq& a) {
    PolyRat r;
    r.c.reserve(a.c.size());
    for (const auto& p : a.c) r.c.push_back(rf_from_poly(p));
    return r;
}

PolyRat tr_scale_div(const Fq& F, const PolyFq& a, const FqPoly& g) {
    PolyRat r;
    r.c.reserve(a.c.size());
    for (const auto& p : a.c) r.c.push_back(rf_make(F, p, g));
    return r;
}

RatFunc tr_eval(const Fq& F, const PolyRat& a, const FqPoly& t) {
    RatFunc r;
    for (std::size_t k = a.c.size(); k-- > 0;) {
        r = rf_mul(F, r, rf_from_poly(t));
        r = rf_add(F, r, a.c[k]);
    }
    return r;
}

} // namespace carlitz
