#include "carlitz/scalar.hpp"

#include <algorithm>
#include <numeric>

#include "carlitz/errors.hpp"

namespace carlitz {

namespace {

// Substitute u -> u^s in a polynomial (exponent stretch).
FqPoly stretch(const FqPoly& p, std::int64_t s) {
    if (s == 1 || p.is_zero()) return p;
    if ((__int128)p.deg() * s > kMaxPolyDegree)
        throw domain_error("polynomial degree exceeds the supported size");
    FqPoly r;
    r.c.assign(std::size_t(p.deg() * s) + 1, 0);
    for (std::size_t k = 0; k < p.c.size(); ++k) r.c[k * std::size_t(s)] = p.c[k];
    return r;
}

// Inverse substitution u^s -> u; requires all exponents divisible by s.
bool try_shrink(const FqPoly& p, std::int64_t s, FqPoly& out) {
    if (p.is_zero()) {
        out = p;
        return true;
    }
    for (std::size_t k = 0; k < p.c.size(); ++k)
        if (p.c[k] != 0 && std::int64_t(k) % s != 0) return false;
    out.c.assign(std::size_t(p.deg() / s) + 1, 0);
    for (std::size_t k = 0; k < p.c.size(); k += std::size_t(s)) out.c[k / std::size_t(s)] = p.c[k];
    return true;
}

RamRat rr_rescaled(const Fq& F, const RamRat& a, std::int64_t denom) {
    if (denom == a.denom) return a;
    std::int64_t s = denom / a.denom;
    return RamRat{denom, rf_make(F, stretch(a.r.num, s), stretch(a.r.den, s))};
}

} // namespace

RamRat rr_from_ratfunc(RatFunc r) { return RamRat{1, std::move(r)}; }
RamRat rr_from_poly(FqPoly p) { return RamRat{1, rf_from_poly(std::move(p))}; }
RamRat rr_zero() { return RamRat{1, rf_zero()}; }
RamRat rr_one() { return RamRat{1, rf_one()}; }

RamRat rr_normalize(const Fq& F, RamRat a) {
    const std::int64_t q = F.q();
    if (a.is_zero()) return rr_zero();
    while (a.denom % q == 0) {
        FqPoly n2, d2;
        if (!try_shrink(a.r.num, q, n2) || !try_shrink(a.r.den, q, d2)) break;
        a = RamRat{a.denom / q, RatFunc{std::move(n2), std::move(d2)}};
    }
    return a;
}

RamRat rr_add(const Fq& F, const RamRat& a, const RamRat& b) {
    std::int64_t d = std::lcm(a.denom, b.denom);
    return rr_normalize(F, RamRat{d, rf_add(F, rr_rescaled(F, a, d).r, rr_rescaled(F, b, d).r)});
}

RamRat rr_neg(const Fq& F, const RamRat& a) { return RamRat{a.denom, rf_neg(F, a.r)}; }

RamRat rr_sub(const Fq& F, const RamRat& a, const RamRat& b) {
    return rr_add(F, a, rr_neg(F, b));
}

RamRat rr_mul(const Fq& F, const RamRat& a, const RamRat& b) {
    std::int64_t d = std::lcm(a.denom, b.denom);
    return rr_normalize(F, RamRat{d, rf_mul(F, rr_rescaled(F, a, d).r, rr_rescaled(F, b, d).r)});
}

RamRat rr_div(const Fq& F, const RamRat& a, const RamRat& b) {
    std::int64_t d = std::lcm(a.denom, b.denom);
    return rr_normalize(F, RamRat{d, rf_div(F, rr_rescaled(F, a, d).r, rr_rescaled(F, b, d).r)});
}

RamRat rr_frobenius(const Fq& F, const RamRat& a) {
    return rr_normalize(F, RamRat{a.denom, RatFunc{stretch(a.r.num, F.q()), stretch(a.r.den, F.q())}});
}

RamRat rr_qth_root(const Fq& F, const RamRat& a, std::int64_t ram_cap) {
    RamRat r = rr_normalize(F, RamRat{a.denom * F.q(), a.r});
    if (r.denom > ram_cap) throw domain_error("ramification budget exceeded");
    return r;
}

bool rr_eq(const Fq& F, const RamRat& a, const RamRat& b) {
    std::int64_t d = std::lcm(a.denom, b.denom);
    return rf_eq(F, rr_rescaled(F, a, d).r, rr_rescaled(F, b, d).r);
}

AbsVal rr_abs(const RamRat& a) {
    AbsVal v;
    if (a.is_zero()) {
        v.zero = true; // exact zero: no bound
        return v;
    }
    std::int64_t num = rf_xorder(a.r);
    std::int64_t g = std::gcd(num == 0 ? a.denom : std::abs(num), a.denom);
    v.num = num / g;
    v.den = a.denom / g;
    return v;
}

LaurentSeries rr_to_laurent(const Fq& F, const RamRat& a, std::int64_t prec) {
    LaurentSeries s = ls_from_ratfunc(F, a.r, prec);
    s.denom = a.denom;
    return s;
}

Scalar sc_from_poly(FqPoly p) { return rr_from_poly(std::move(p)); }
Scalar sc_from_ratfunc(RatFunc r) { return rr_from_ratfunc(std::move(r)); }
Scalar sc_zero() { return rr_zero(); }

Scalar sc_from_int(const Fq& F, std::int64_t v) {
    std::int64_t m = v % F.p();
    if (m < 0) m += F.p();
    return rr_from_poly(fp_const(FqElem(m)));
}

bool sc_is_exact(const Scalar& a) { return std::holds_alternative<RamRat>(a); }

bool sc_is_zero(const Scalar& a) {
    if (auto* r = std::get_if<RamRat>(&a)) return r->is_zero();
    return std::get<LaurentSeries>(a).is_zero();
}

LaurentSeries sc_to_laurent(const Fq& F, const Scalar& a, std::int64_t prec,
                            std::int64_t denom_hint) {
    if (auto* r = std::get_if<RamRat>(&a)) {
        std::int64_t d = std::lcm(r->denom, denom_hint);
        // prec is given in units of 1/denom_hint; convert to 1/d
        std::int64_t prec_d = prec * (d / denom_hint);
        LaurentSeries s = rr_to_laurent(F, rr_rescaled(F, *r, d), prec_d);
        return s;
    }
    const LaurentSeries& s = std::get<LaurentSeries>(a);
    std::int64_t d = std::lcm(s.denom, denom_hint);
    return ls_truncate(ls_with_denom(s, d), prec * (d / denom_hint));
}

namespace {

// Promotion precision for exact*series so the series' own precision is the
// binding constraint of the product.
LaurentSeries promote_for_mul(const Fq& F, const RamRat& e, const LaurentSeries& s) {
    std::int64_t d = std::lcm(e.denom, s.denom);
    std::int64_t sv = (s.is_zero() ? s.prec : s.val) * (d / s.denom);
    std::int64_t sp = s.prec * (d / s.denom);
    std::int64_t ev = e.is_zero() ? 0 : rf_xorder(e.r) * (d / e.denom);
    // want: sv + prec_e >= ev + sp, so the series' uncertainty binds
    std::int64_t need = ev + sp - sv + 1;
    return sc_to_laurent(F, Scalar(e), std::max<std::int64_t>(need, ev + 1), d);
}

} // namespace

Scalar sc_add(const Fq& F, const Scalar& a, const Scalar& b) {
    if (sc_is_exact(a) && sc_is_exact(b))
        return rr_add(F, std::get<RamRat>(a), std::get<RamRat>(b));
    if (sc_is_exact(a)) {
        const auto& s = std::get<LaurentSeries>(b);
        std::int64_t d = std::lcm(std::get<RamRat>(a).denom, s.denom);
        return ls_add(F, sc_to_laurent(F, a, s.prec * (d / s.denom), d), s);
    }
    if (sc_is_exact(b)) return sc_add(F, b, a);
    return ls_add(F, std::get<LaurentSeries>(a), std::get<LaurentSeries>(b));
}

Scalar sc_neg(const Fq& F, const Scalar& a) {
    if (auto* r = std::get_if<RamRat>(&a)) return rr_neg(F, *r);
    return ls_neg(F, std::get<LaurentSeries>(a));
}

Scalar sc_sub(const Fq& F, const Scalar& a, const Scalar& b) {
    return sc_add(F, a, sc_neg(F, b));
}

Scalar sc_mul(const Fq& F, const Scalar& a, const Scalar& b) {
    if (sc_is_exact(a) && sc_is_exact(b))
        return rr_mul(F, std::get<RamRat>(a), std::get<RamRat>(b));
    if (sc_is_exact(a)) {
        const auto& e = std::get<RamRat>(a);
        if (e.is_zero()) return rr_zero();
        return ls_mul(F, promote_for_mul(F, e, std::get<LaurentSeries>(b)),
                      std::get<LaurentSeries>(b));
    }
    if (sc_is_exact(b)) return sc_mul(F, b, a);
    return ls_mul(F, std::get<LaurentSeries>(a), std::get<LaurentSeries>(b));
}

Scalar sc_frobenius(const Fq& F, const Scalar& a) {
    if (auto* r = std::get_if<RamRat>(&a)) return rr_frobenius(F, *r);
    return ls_frobenius(F, std::get<LaurentSeries>(a));
}

Scalar sc_pow_q(const Fq& F, const Scalar& a, int n) {
    Scalar r = a;
    for (int k = 0; k < n; ++k) r = sc_frobenius(F, r);
    return r;
}

Scalar sc_qth_root(const Fq& F, const Scalar& a, std::int64_t ram_cap) {
    if (auto* r = std::get_if<RamRat>(&a)) return rr_qth_root(F, *r, ram_cap);
    return ls_qth_root(F, std::get<LaurentSeries>(a), ram_cap);
}

AbsVal sc_abs(const Scalar& a) {
    if (auto* r = std::get_if<RamRat>(&a)) return rr_abs(*r);
    return ls_abs(std::get<LaurentSeries>(a));
}

ScalarEq sc_eq(const Fq& F, const Scalar& a, const Scalar& b) {
    ScalarEq r;
    if (sc_is_exact(a) && sc_is_exact(b)) {
        r.exact = true;
        r.equal = rr_eq(F, std::get<RamRat>(a), std::get<RamRat>(b));
        return r;
    }
    Scalar diff = sc_sub(F, a, b);
    const auto& s = std::get<LaurentSeries>(diff);
    r.equal = s.is_zero();
    std::int64_t g = std::gcd(s.prec == 0 ? s.denom : std::abs(s.prec), s.denom);
    r.prec_num = s.prec / g;
    r.prec_den = s.denom / g;
    return r;
}

} // namespace carlitz
