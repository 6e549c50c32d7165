#include "carlitz/laurent.hpp"

#include <algorithm>
#include <numeric>

#include "carlitz/errors.hpp"

namespace carlitz {

int av_cmp_exp(const AbsVal& a, std::int64_t num, std::int64_t den) {
    if (a.zero) return -1;
    // |a| = q^(-a.num/a.den) vs q^(-num/den): compare exponents reversed
    __int128 lhs = (__int128)a.num * den;
    __int128 rhs = (__int128)num * a.den;
    if (lhs == rhs) return 0;
    return lhs > rhs ? -1 : 1;
}

int av_cmp(const AbsVal& a, const AbsVal& b) {
    if (a.zero && b.zero) return 0;
    if (a.zero) return -1;
    if (b.zero) return 1;
    return av_cmp_exp(a, b.num, b.den);
}

LaurentSeries ls_zero(std::int64_t prec, std::int64_t denom) {
    LaurentSeries z;
    z.denom = denom;
    z.val = prec;
    z.prec = prec;
    return z;
}

LaurentSeries ls_make(std::int64_t denom, std::int64_t val, std::vector<FqElem> coeffs,
                      std::int64_t prec) {
    if (denom < 1) throw domain_error("ramification denominator must be positive");
    if (prec - val > (std::int64_t(1) << 26))
        throw domain_error("series length exceeds the supported size");
    if (val + std::int64_t(coeffs.size()) > prec)
        coeffs.resize(std::size_t(std::max<std::int64_t>(0, prec - val)));
    std::size_t lead = 0;
    while (lead < coeffs.size() && coeffs[lead] == 0) ++lead;
    if (lead == coeffs.size()) return ls_zero(prec, denom);
    LaurentSeries r;
    r.denom = denom;
    r.val = val + std::int64_t(lead);
    r.c.assign(coeffs.begin() + lead, coeffs.end());
    r.c.resize(std::size_t(prec - r.val), 0);
    r.prec = prec;
    return r;
}

LaurentSeries ls_from_poly(const FqPoly& p, std::int64_t prec) {
    return ls_make(1, 0, p.c, prec);
}

LaurentSeries ls_monomial(FqElem a, std::int64_t vnum, std::int64_t vden, std::int64_t prec) {
    if (a == 0) return ls_zero(prec, vden);
    return ls_make(vden, vnum, {a}, prec);
}

LaurentSeries ls_truncate(const LaurentSeries& a, std::int64_t p) {
    if (p >= a.prec) return a;
    return ls_make(a.denom, a.val, a.c, p);
}

LaurentSeries ls_with_denom(const LaurentSeries& a, std::int64_t denom) {
    if (denom == a.denom) return a;
    if (denom % a.denom != 0) throw internal_error("denominator rescale must be a multiple");
    std::int64_t s = denom / a.denom;
    if ((__int128)(a.prec - a.val) * s > (std::int64_t(1) << 26))
        throw domain_error("series length exceeds the supported size");
    LaurentSeries r;
    r.denom = denom;
    r.val = a.val * s;
    r.prec = a.prec * s;
    if (!a.is_zero()) {
        r.c.assign(a.c.size() * std::size_t(s) - std::size_t(s - 1), 0);
        for (std::size_t k = 0; k < a.c.size(); ++k) r.c[k * std::size_t(s)] = a.c[k];
        r.c.resize(std::size_t(r.prec - r.val), 0);
    } else {
        r.val = r.prec;
    }
    return r;
}

namespace {

std::int64_t common_denom(const LaurentSeries& a, const LaurentSeries& b) {
    return std::lcm(a.denom, b.denom);
}

} // namespace

LaurentSeries ls_add(const Fq& F, const LaurentSeries& a0, const LaurentSeries& b0) {
    std::int64_t d = common_denom(a0, b0);
    LaurentSeries a = ls_with_denom(a0, d);
    LaurentSeries b = ls_with_denom(b0, d);
    std::int64_t prec = std::min(a.prec, b.prec);
    std::int64_t lo = std::min(a.is_zero() ? prec : a.val, b.is_zero() ? prec : b.val);
    if (lo >= prec) return ls_zero(prec, d);
    std::vector<FqElem> c(std::size_t(prec - lo), 0);
    for (std::int64_t e = lo; e < prec; ++e)
        c[std::size_t(e - lo)] = F.add(a.at(e), b.at(e));
    return ls_make(d, lo, std::move(c), prec);
}

LaurentSeries ls_neg(const Fq& F, const LaurentSeries& a) {
    LaurentSeries r = a;
    for (auto& v : r.c) v = F.neg(v);
    return r;
}

LaurentSeries ls_sub(const Fq& F, const LaurentSeries& a, const LaurentSeries& b) {
    return ls_add(F, a, ls_neg(F, b));
}

LaurentSeries ls_scale(const Fq& F, const LaurentSeries& a, FqElem s) {
    if (s == 0) return ls_zero(a.prec, a.denom);
    LaurentSeries r = a;
    for (auto& v : r.c) v = F.mul(v, s);
    return r;
}

LaurentSeries ls_mul(const Fq& F, const LaurentSeries& a0, const LaurentSeries& b0) {
    std::int64_t d = common_denom(a0, b0);
    LaurentSeries a = ls_with_denom(a0, d);
    LaurentSeries b = ls_with_denom(b0, d);
    std::int64_t va = a.is_zero() ? a.prec : a.val;
    std::int64_t vb = b.is_zero() ? b.prec : b.val;
    std::int64_t prec = std::min(va + b.prec, vb + a.prec);
    if (a.is_zero() || b.is_zero()) return ls_zero(prec, d);
    std::int64_t lo = va + vb;
    std::size_t n = std::size_t(std::max<std::int64_t>(0, prec - lo));
    std::vector<FqElem> c(n, 0);
    for (std::size_t i = 0; i < a.c.size() && i < n; ++i) {
        if (a.c[i] == 0) continue;
        std::size_t len = std::min(b.c.size(), n - i);
        fp_axpy(F, c.data() + i, b.c.data(), len, a.c[i]);
    }
    return ls_make(d, lo, std::move(c), prec);
}

LaurentSeries ls_inv(const Fq& F, const LaurentSeries& a) {
    if (a.is_zero()) throw domain_error("inverse of a series that is zero at its precision");
    // 1/(x^(v/d) u) with u a unit: invert the unit part by long division.
    std::size_t n = a.c.size();
    std::vector<FqElem> u(n, 0);
    FqElem lead_inv = F.inv(a.c[0]);
    for (std::size_t k = 0; k < n; ++k) {
        FqElem acc = (k == 0) ? FqElem(1) : FqElem(0);
        for (std::size_t j = 1; j <= k; ++j)
            acc = F.sub(acc, F.mul(a.c[j], u[k - j]));
        u[k] = F.mul(acc, lead_inv);
    }
    // prec of the inverse: u known mod x^(n/d) => result val -a.val, length n
    return ls_make(a.denom, -a.val, std::move(u), -a.val + std::int64_t(n));
}

LaurentSeries ls_from_ratfunc(const Fq& F, const RatFunc& r, std::int64_t prec) {
    if (r.is_zero()) return ls_zero(prec);
    std::int64_t vn = fp_xorder(r.num);
    std::int64_t vd = fp_xorder(r.den);
    std::int64_t val = vn - vd;
    std::size_t n = std::size_t(std::max<std::int64_t>(0, prec - val));
    if (n == 0) return ls_zero(prec);
    // unit parts; coefficients past the output window cannot influence it
    std::vector<FqElem> nu(r.num.c.begin() + vn,
                           r.num.c.begin() + std::min<std::size_t>(r.num.c.size(), std::size_t(vn) + n));
    std::vector<FqElem> de(r.den.c.begin() + vd,
                           r.den.c.begin() + std::min<std::size_t>(r.den.c.size(), std::size_t(vd) + n));
    nu.resize(std::max(nu.size(), n), 0);
    std::vector<FqElem> out(n, 0);
    FqElem lead_inv = F.inv(de[0]);
    for (std::size_t k = 0; k < n; ++k) {
        FqElem acc = nu[k];
        for (std::size_t j = 1; j <= k && j < de.size(); ++j)
            acc = F.sub(acc, F.mul(de[j], out[k - j]));
        out[k] = F.mul(acc, lead_inv);
    }
    return ls_make(1, val, std::move(out), prec);
}

AbsVal ls_abs(const LaurentSeries& a) {
    AbsVal v;
    if (a.is_zero()) {
        v.zero = true;
        std::int64_t g = std::gcd(a.prec == 0 ? a.denom : std::abs(a.prec), a.denom);
        v.bound = std::make_pair(a.prec / g, a.denom / g);
        return v;
    }
    std::int64_t g = std::gcd(a.val == 0 ? a.denom : std::abs(a.val), a.denom);
    v.num = a.val / g;
    v.den = a.denom / g;
    return v;
}

namespace {

// Divide denominator and all exponents by the largest power of q possible.
LaurentSeries reduce_denom(const Fq& F, const LaurentSeries& a) {
    LaurentSeries r = a;
    const std::int64_t q = F.q();
    while (r.denom % q == 0) {
        bool ok = r.val % q == 0;
        for (std::size_t k = 0; ok && k < r.c.size(); ++k)
            if (r.c[k] != 0 && (r.val + std::int64_t(k)) % q != 0) ok = false;
        if (!ok) break;
        std::vector<FqElem> c;
        if (!r.is_zero()) {
            c.resize((r.c.size() + std::size_t(q) - 1) / std::size_t(q), 0);
            for (std::size_t k = 0; k < r.c.size(); k += std::size_t(q))
                c[k / std::size_t(q)] = r.c[k];
        }
        std::int64_t prec = r.prec >= 0 ? r.prec / q : -((-r.prec + q - 1) / q); // floor
        r = ls_make(r.denom / q, r.val / q, std::move(c), prec);
    }
    return r;
}

} // namespace

LaurentSeries ls_frobenius(const Fq& F, const LaurentSeries& a) {
    const std::int64_t q = F.q();
    if ((__int128)(a.prec - a.val) * q > (std::int64_t(1) << 26))
        throw domain_error("series length exceeds the supported size");
    LaurentSeries r;
    r.denom = a.denom;
    r.val = a.val * q;
    r.prec = a.prec * q;
    if (!a.is_zero()) {
        r.c.assign(std::size_t(r.prec - r.val), 0);
        for (std::size_t k = 0; k < a.c.size(); ++k) r.c[k * std::size_t(q)] = a.c[k];
    } else {
        r.val = r.prec;
    }
    return reduce_denom(F, r);
}

LaurentSeries ls_qth_root(const Fq& F, const LaurentSeries& a, std::int64_t ram_cap) {
    const std::int64_t q = F.q();
    LaurentSeries r = a;
    r.denom = a.denom * q; // same exponent indices, finer units
    r = reduce_denom(F, r);
    if (r.denom > ram_cap) throw domain_error("ramification budget exceeded");
    return r;
}

EqAtPrec ls_eq(const Fq& F, const LaurentSeries& a0, const LaurentSeries& b0) {
    std::int64_t d = common_denom(a0, b0);
    LaurentSeries a = ls_with_denom(a0, d);
    LaurentSeries b = ls_with_denom(b0, d);
    std::int64_t prec = std::min(a.prec, b.prec);
    EqAtPrec r;
    std::int64_t g = std::gcd(prec == 0 ? d : std::abs(prec), d);
    r.prec_num = prec / g;
    r.prec_den = d / g;
    std::int64_t lo = std::min(a.is_zero() ? prec : a.val, b.is_zero() ? prec : b.val);
    (void)F;
    for (std::int64_t e = lo; e < prec; ++e)
        if (a.at(e) != b.at(e)) return r;
    r.equal = true;
    return r;
}

} // namespace carlitz
