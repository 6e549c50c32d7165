#include "carlitz/expseries.hpp"

#include <algorithm>

#include "carlitz/errors.hpp"

namespace carlitz {

namespace {

std::int64_t ipow(std::int64_t b, int e) {
    std::int64_t r = 1;
    while (e-- > 0) r *= b;
    return r;
}

std::int64_t bracket_sum(std::int64_t q, int j) { // (q^j - 1)/(q - 1)
    return (ipow(q, j) - 1) / (q - 1);
}

} // namespace

std::int64_t exp_term_exponent(std::int64_t q, int j, std::int64_t vz) {
    return ipow(q, j) * vz - bracket_sum(q, j);
}

bool exp_domain_ok(std::int64_t q, const AbsVal& z_abs) {
    if (z_abs.zero) return true;
    // vz/dz > 1/(q-1)
    return z_abs.num * (q - 1) > z_abs.den;
}

LaurentSeries carlitz_exp(const CarlitzCache& C, const LaurentSeries& z, std::int64_t prec) {
    const Fq& F = C.field();
    const std::int64_t q = F.q();
    if (z.denom != 1) throw domain_error("exponential takes unramified arguments");
    if (z.is_zero()) return ls_zero(std::min(prec, z.prec));
    AbsVal va = ls_abs(z);
    if (!exp_domain_ok(q, va))
        throw domain_error("|z| >= q^(-1/(q-1)): outside the exponential's domain");

    // smallest N with the first omitted term below x^prec
    int n = 0;
    while (exp_term_exponent(q, n + 1, z.val) < prec) {
        ++n;
        if (n > C.imax())
            throw precision_error("requested precision needs a deeper factorial cache");
    }

    LaurentSeries acc = ls_zero(prec);
    LaurentSeries zq = z;
    for (int j = 0; j <= n; ++j) {
        if (j > 0) zq = ls_frobenius(F, zq);
        RatFunc inv_d = rf_make(F, fp_one(), C.D(j));
        LaurentSeries term = ls_mul(F, zq, ls_from_ratfunc(F, inv_d, prec));
        acc = ls_add(F, acc, ls_truncate(term, prec));
    }
    if (acc.prec < prec)
        throw precision_error("argument precision cannot certify the requested output precision");
    return ls_truncate(acc, prec);
}

LaurentSeries carlitz_exp_partial(const CarlitzCache& C, const LaurentSeries& z, int n) {
    const Fq& F = C.field();
    LaurentSeries acc = ls_zero(z.prec * ipow(F.q(), n));
    LaurentSeries zq = z;
    for (int j = 0; j <= n; ++j) {
        if (j > 0) zq = ls_frobenius(F, zq);
        std::int64_t need = zq.prec + fp_xorder(C.D(j)) + 1;
        LaurentSeries term = ls_mul(F, zq, ls_from_ratfunc(F, rf_make(F, fp_one(), C.D(j)), need));
        acc = ls_add(F, acc, term);
    }
    return acc;
}

RatFunc carlitz_exp_partial_rat(const CarlitzCache& C, const RatFunc& z, int n) {
    const Fq& F = C.field();
    RatFunc acc;
    for (int j = 0; j <= n; ++j)
        acc = rf_add(F, acc, rf_div(F, rf_pow_q(F, z, j), rf_from_poly(C.D(j))));
    return acc;
}

LaurentSeries rho(const CarlitzCache& C, const LaurentSeries& zeta, std::int64_t prec) {
    const Fq& F = C.field();
    const std::int64_t q = F.q();
    if (zeta.denom != 1) throw domain_error("rho takes unramified arguments");
    if (zeta.is_zero()) return ls_zero(std::min(prec, zeta.prec));
    if (zeta.val < 1) throw domain_error("|zeta| >= 1: outside rho's domain");

    // term n has exponent q^n * v - n, increasing in n for v >= 1
    int n = 0;
    while (ipow(q, n + 1) * zeta.val - (n + 1) < prec) {
        ++n;
        if (n > C.imax())
            throw precision_error("requested precision needs a deeper factorial cache");
    }

    LaurentSeries acc = ls_zero(prec);
    LaurentSeries zq = zeta;
    for (int j = 0; j <= n; ++j) {
        if (j > 0) zq = ls_frobenius(F, zq);
        RatFunc coeff = rf_make(F, fp_const(F.sign(std::uint64_t(j))), C.L(j));
        LaurentSeries term = ls_mul(F, zq, ls_from_ratfunc(F, coeff, prec));
        acc = ls_add(F, acc, ls_truncate(term, prec));
    }
    if (acc.prec < prec)
        throw precision_error("argument precision cannot certify the requested output precision");
    acc = ls_truncate(acc, prec);

    // |rho(zeta)| <= max(|zeta|, q |zeta|^q), and the image stays inside the
    // exponential's domain when zeta is
    if (!acc.is_zero()) {
        std::int64_t bound = std::min(zeta.val, q * zeta.val - 1);
        if (acc.val < bound) throw internal_error("rho violates its valuation bound");
        if (exp_domain_ok(q, ls_abs(zeta)) && !exp_domain_ok(q, ls_abs(acc)))
            throw internal_error("rho left the exponential's domain");
    }
    return acc;
}

LaurentSeries rho_partial(const CarlitzCache& C, const LaurentSeries& zeta, int n) {
    const Fq& F = C.field();
    LaurentSeries acc = ls_zero(zeta.prec * ipow(F.q(), n));
    LaurentSeries zq = zeta;
    for (int j = 0; j <= n; ++j) {
        if (j > 0) zq = ls_frobenius(F, zq);
        std::int64_t need = zq.prec + fp_xorder(C.L(j)) + 1;
        RatFunc coeff = rf_make(F, fp_const(F.sign(std::uint64_t(j))), C.L(j));
        acc = ls_add(F, acc, ls_mul(F, zq, ls_from_ratfunc(F, coeff, need)));
    }
    return acc;
}

RatFunc rho_partial_rat(const CarlitzCache& C, const RatFunc& zeta, int n) {
    const Fq& F = C.field();
    RatFunc acc;
    for (int j = 0; j <= n; ++j) {
        RatFunc term = rf_div(F, rf_pow_q(F, zeta, j), rf_from_poly(C.L(j)));
        if (j % 2 == 1) term = rf_neg(F, term);
        acc = rf_add(F, acc, term);
    }
    return acc;
}

InverseReport verify_inverse(const CarlitzCache& C, const LaurentSeries& zeta,
                             std::int64_t prec) {
    const Fq& F = C.field();
    if (!exp_domain_ok(F.q(), ls_abs(zeta)))
        throw domain_error("|zeta| >= q^(-1/(q-1)): outside the composition identity's domain");
    LaurentSeries w = rho(C, zeta, prec);
    LaurentSeries back = carlitz_exp(C, w, prec);
    EqAtPrec eq = ls_eq(F, back, zeta);
    InverseReport rep;
    rep.equal = eq.equal;
    rep.prec = eq.prec_num / std::max<std::int64_t>(eq.prec_den, 1);
    return rep;
}

CarlitzCoeffs wz_coeffs(const CarlitzCache& C, const LaurentSeries& z, std::size_t m,
                        std::int64_t prec) {
    const Fq& F = C.field();
    CarlitzCoeffs out;
    if (z.is_zero()) {
        out.c.assign(m, sc_zero());
        return out;
    }
    LaurentSeries b = carlitz_exp(C, z, prec);
    out.c.reserve(m);
    for (std::size_t nidx = 0; nidx < m; ++nidx) {
        if (nidx > 0) b = ls_frobenius(F, b);
        out.c.push_back(Scalar(b));
    }
    return out;
}

LinearPoly exp_linear_truncation(const CarlitzCache& C, int n) {
    const Fq& F = C.field();
    LinearPoly out;
    out.u.reserve(std::size_t(n) + 1);
    for (int j = 0; j <= n; ++j)
        out.u.push_back(sc_from_ratfunc(rf_make(F, fp_one(), C.D(j))));
    return out;
}

LinearPoly wz_partial_poly(const CarlitzCache& C, int big_n, int n) {
    return delta_iter(C.field(), exp_linear_truncation(C, big_n), n);
}

bool wz_partial_identity_holds(const CarlitzCache& C, int big_n, int n) {
    const Fq& F = C.field();
    if (n > big_n) return false;
    LinearPoly lhs = wz_partial_poly(C, big_n, n);
    // (exp truncation at N-n)^(q^n): coefficient 1/D_j^(q^n) at slot j+n
    LinearPoly rhs;
    rhs.u.assign(std::size_t(big_n) + 1, sc_zero());
    for (int j = 0; j + n <= big_n; ++j)
        rhs.u[std::size_t(j + n)] =
            sc_from_ratfunc(rf_pow_q(F, rf_make(F, fp_one(), C.D(j)), n));
    if (lhs.u.size() != rhs.u.size()) return false;
    for (std::size_t k = 0; k < lhs.u.size(); ++k)
        if (!sc_eq(F, lhs.u[k], rhs.u[k]).equal) return false;
    return true;
}

WzTwoRoute wz_two_route_exact(const CarlitzCache& C, int m, const FqPoly& z, const FqPoly& t) {
    const Fq& F = C.field();
    const int n = m; // truncation level
    const std::int64_t q = F.q();
    const FqPoly& dn = C.D(n);
    WzTwoRoute out;

    // numerators of delta^(i) exp_N at x^k z over the common denominator D_N
    std::vector<std::vector<FqPoly>> num(std::size_t(n) + 1);
    num[0].resize(std::size_t(n) + 1);
    for (int k = 0; k <= n; ++k) {
        FqPoly w = fp_shift(z, k);
        FqPoly acc;
        for (int j = 0; j <= n; ++j)
            acc = fp_add(F, acc, fp_mul(F, fp_pow_q(F, w, j), fp_div_exact(F, dn, C.D(j))));
        num[0][std::size_t(k)] = std::move(acc);
    }
    for (int i = 1; i <= n; ++i) {
        num[std::size_t(i)].resize(std::size_t(n - i) + 1);
        for (int k = 0; k + i <= n; ++k) {
            FqPoly shift = fp_shift(num[std::size_t(i - 1)][std::size_t(k)], ipow(q, i - 1));
            num[std::size_t(i)][std::size_t(k)] =
                fp_sub(F, num[std::size_t(i - 1)][std::size_t(k + 1)], shift);
        }
    }

    auto e_at_t = [&](int i) {
        auto e = e_poly(C, i);
        FqPoly v;
        for (std::size_t j = 0; j < e.size(); ++j)
            v = fp_add(F, v, fp_mul(F, e[j], fp_pow_q(F, t, int(j))));
        return v;
    };

    // route A: sum_{i<m} b_i(z) e_i(t) D_{m-1}/D_i over D_N D_{m-1}
    const FqPoly& dm = C.D(m - 1);
    FqPoly a_num;
    for (int i = 0; i < m; ++i) {
        FqPoly term =
            fp_mul(F, num[std::size_t(i)][0], fp_mul(F, e_at_t(i), fp_div_exact(F, dm, C.D(i))));
        a_num = fp_add(F, a_num, term);
    }
    // route B: exp_N(t z) over the same denominator
    FqPoly tz = fp_mul(F, t, z);
    FqPoly b_num;
    for (int j = 0; j <= n; ++j)
        b_num = fp_add(F, b_num, fp_mul(F, fp_pow_q(F, tz, j), fp_div_exact(F, dn, C.D(j))));
    b_num = fp_mul(F, b_num, dm);

    FqPoly diff = fp_sub(F, a_num, b_num);
    std::int64_t den_order = fp_xorder(dn) + fp_xorder(dm);
    out.tail_exponent = ipow(q, m) * std::max<std::int64_t>(fp_xorder(z), 0);
    out.residual_exponent = diff.is_zero() ? -1 : fp_xorder(diff) - den_order;
    out.tail_ok = diff.is_zero() || out.residual_exponent >= out.tail_exponent;

    // keeping the i = N coefficient too, the identity is exact
    FqPoly full_num = fp_add(F, fp_mul(F, a_num, C.D(m)),
                             fp_mul(F, fp_mul(F, num[std::size_t(m)][0], e_at_t(m)), dm));
    out.full_ok = fp_sub(F, full_num, fp_mul(F, b_num, C.D(m))).is_zero();
    return out;
}

} // namespace carlitz
