#include "carlitz/suites.hpp"

#include <algorithm>
#include <chrono>
#include <functional>

#include "carlitz/errors.hpp"
#include "carlitz/expseries.hpp"
#include "carlitz/prng.hpp"
#include "carlitz/serialize.hpp"

namespace carlitz {

namespace {

std::int64_t ipow(std::int64_t b, int e) {
    std::int64_t r = 1;
    while (e-- > 0) r *= b;
    return r;
}

struct Ctx {
    SuiteReport rep;

    void check(bool ok, const std::function<std::string()>& ce) {
        ++rep.cases;
        if (ok)
            ++rep.passed;
        else if (rep.counterexample.empty())
            rep.counterexample = ce();
    }
    void check(bool ok, const std::string& ce) {
        check(ok, [&] { return ce; });
    }
    void certify(std::string note) { rep.certified.push_back(std::move(note)); }
};

FqPoly random_poly(const Fq& F, Prng& rng, int maxdeg) {
    std::vector<FqElem> c(rng.below(std::uint64_t(maxdeg) + 2));
    for (auto& v : c) v = FqElem(rng.below(std::uint64_t(F.q())));
    return FqPoly(std::move(c));
}

// |c_i| <= 1 with at least one unit coefficient, so the norm is exactly 1.
CarlitzCoeffs random_unit_coeffs(const Fq& F, Prng& rng, std::size_t m) {
    CarlitzCoeffs c;
    for (std::size_t i = 0; i < m; ++i) c.c.push_back(sc_from_poly(random_poly(F, rng, 3)));
    std::size_t pick = std::size_t(rng.below(m));
    FqPoly u = random_poly(F, rng, 3);
    u.c.resize(std::max<std::size_t>(u.c.size(), 1), 0);
    u.c[0] = FqElem(1 + rng.below(std::uint64_t(F.q() - 1)));
    c.c[pick] = sc_from_poly(u);
    return c;
}

LaurentSeries random_series_point(const Fq& F, Prng& rng, std::int64_t vmin, std::int64_t vmax,
                                  std::int64_t prec) {
    std::int64_t v = vmin + std::int64_t(rng.below(std::uint64_t(vmax - vmin + 1)));
    std::vector<FqElem> c;
    c.push_back(FqElem(1 + rng.below(std::uint64_t(F.q() - 1))));
    for (int k = 0; k < 6; ++k) c.push_back(FqElem(rng.below(std::uint64_t(F.q()))));
    return ls_make(1, v, std::move(c), prec);
}

std::vector<FqPoly> grid(const Fq& F, int degree_bound) {
    std::vector<FqPoly> out;
    std::int64_t count = 1;
    for (int k = 0; k < degree_bound; ++k) count *= F.q();
    out.reserve(std::size_t(count));
    for (std::int64_t idx = 0; idx < count; ++idx) {
        FqPoly t;
        std::int64_t v = idx;
        for (int k = 0; k < degree_bound; ++k) {
            t.c.push_back(FqElem(v % F.q()));
            v /= F.q();
        }
        t.trim();
        out.push_back(std::move(t));
    }
    return out;
}

std::string coeffs_text(const Fq& F, const CarlitzCoeffs& c) {
    std::string s = "[";
    for (std::size_t i = 0; i < c.c.size(); ++i) {
        if (i) s += "; ";
        s += scalar_text(F, c.c[i]);
    }
    return s + "]";
}

PolyFq linear_to_dense(const Fq& F, const std::vector<FqPoly>& u) {
    PolyFq d;
    if (u.empty()) return d;
    d.c.assign(std::size_t(ipow(F.q(), int(u.size()) - 1)) + 1, FqPoly());
    for (std::size_t j = 0; j < u.size(); ++j) d.c[std::size_t(ipow(F.q(), int(j)))] = u[j];
    d.trim();
    return d;
}

// ---------------------------------------------------------------- basis

void suite_basis(const RunConfig& cfg, Ctx& ctx) {
    Fq F = cfg.make_field();
    const std::int64_t q = F.q();
    const int d_sum = std::min(cfg.imax, sum_depth_cap(int(q)));
    const int d_orc = std::min(cfg.imax, oracle_depth_cap(int(q)));
    CarlitzCache C(F, std::max(d_sum, 1));

    // factorial laws, re-verified against the cache contents
    for (int i = 1; i <= d_sum; ++i) {
        FqPoly dp = fp_one(), lp = fp_one();
        for (int k = i; k >= 1; --k) {
            dp = fp_mul(F, dp, fp_pow_q(F, bracket_poly(F, k), i - k));
            lp = fp_mul(F, lp, bracket_poly(F, k));
        }
        ctx.check(dp == C.D(i) && lp == C.L(i),
                  [&] { return "factorial closed product, i=" + std::to_string(i) +
                               ", D_i=" + poly_text(F, C.D(i)); });
        ctx.check(fp_xorder(C.D(i)) == (ipow(q, i) - 1) / (q - 1) && fp_xorder(C.L(i)) == i,
                  [&] { return "factorial x-order, i=" + std::to_string(i) +
                               ", D_i=" + poly_text(F, C.D(i)); });
    }

    // product formula vs alternating sum
    for (int i = 0; i <= d_orc; ++i) {
        PolyFq oracle = e_product_oracle(F, i);
        PolyFq dense = linear_to_dense(F, e_poly(C, i));
        bool same = oracle.c.size() == dense.c.size();
        for (std::size_t k = 0; same && k < oracle.c.size(); ++k)
            same = oracle.c[k] == dense.c[k];
        ctx.check(same, [&] { return "e_" + std::to_string(i) + " product vs sum: " +
                                     tpoly_text(F, oracle) + " vs " + tpoly_text(F, dense); });
    }

    // e_i kills arguments of lower degree
    for (int i = 1; i <= std::min(d_orc, 5); ++i) {
        auto e = e_poly(C, i);
        bool all = true;
        FqPoly witness;
        for (const FqPoly& m : grid(F, i)) {
            FqPoly acc;
            for (std::size_t j = 0; j < e.size(); ++j)
                acc = fp_add(F, acc, fp_mul(F, e[j], fp_pow_q(F, m, int(j))));
            if (!acc.is_zero()) {
                all = false;
                witness = m;
                break;
            }
        }
        ctx.check(all, [&] { return "e_" + std::to_string(i) +
                                    " does not vanish at m=" + poly_text(F, witness); });
    }

    // ladder recurrence e_i = e_{i-1}^q - D_{i-1}^(q-1) e_{i-1}
    for (int i = 1; i <= d_sum; ++i) {
        auto prev = e_poly(C, i - 1);
        auto cur = e_poly(C, i);
        FqPoly dq = fp_pow(F, C.D(i - 1), std::uint64_t(q - 1));
        std::vector<FqPoly> rhs(std::size_t(i) + 1);
        for (std::size_t j = 0; j < prev.size(); ++j) {
            rhs[j + 1] = fp_add(F, rhs[j + 1], fp_pow_q(F, prev[j], 1));
            rhs[j] = fp_sub(F, rhs[j], fp_mul(F, dq, prev[j]));
        }
        bool same = true;
        for (std::size_t j = 0; j <= std::size_t(i); ++j)
            if (!(cur[j] == rhs[j])) same = false;
        ctx.check(same, [&] { return "ladder recurrence at i=" + std::to_string(i); });
    }

    // h_{q^i} = f_i and deg h_j = j
    for (int i = 0; ipow(q, i) <= std::min<std::int64_t>(ipow(q, d_sum), 512); ++i) {
        auto h = h_poly(C, std::uint64_t(ipow(q, i)));
        auto f = f_poly(C, i);
        bool same = h.h.deg() == ipow(q, i);
        for (int j = 0; same && j <= i; ++j)
            same = rf_eq(F, h.h.c[std::size_t(ipow(q, j))], f[std::size_t(j)]);
        ctx.check(same, [&] { return "h at q^" + std::to_string(i) + " differs from f"; });
    }
    for (std::uint64_t j = 0; j < std::min<std::uint64_t>(64, std::uint64_t(ipow(q, d_sum))); ++j)
        ctx.check(h_poly(C, j).h.deg() == std::int64_t(j),
                  [&] { return "deg h_" + std::to_string(j); });

    // delta f_i = f_{i-1}^q on coefficients
    for (std::size_t i = 1; i <= std::size_t(d_sum); ++i) {
        CarlitzCoeffs lhs = delta_coeffs(F, CarlitzCoeffs::unit(i, std::size_t(d_sum) + 1));
        CarlitzCoeffs rhs = qth_power_coeffs(F, CarlitzCoeffs::unit(i - 1, std::size_t(d_sum) + 1));
        ctx.check(coeffs_eq(F, lhs, rhs).equal,
                  [&] { return "delta f_i at i=" + std::to_string(i); });
    }
}

// ---------------------------------------------------------- orthonormal

void suite_orthonormal(const RunConfig& cfg, Ctx& ctx) {
    Fq F = cfg.make_field();
    const std::int64_t grid_budget = F.q() <= 3 ? 8192 : 2048;
    int bound = std::min(cfg.m, 6) + 2;
    while (bound > 3 && ipow(F.q(), bound) > grid_budget) --bound;
    const std::size_t m = std::size_t(bound - 2); // keeps the grid two degrees deep
    CarlitzCache C(F, std::max<int>(int(m), 1));
    Prng rng(Prng::derive(cfg.seed, "orthonormal"));

    const std::int64_t wprec = 24;
    auto points = grid(F, bound);
    // basis values f_i(t) = e_i(t)/D_i expanded per point; the fractions are
    // left unreduced, which the series expansion does not mind
    std::vector<std::vector<FqPoly>> epolys;
    for (std::size_t i = 0; i < m; ++i) epolys.push_back(e_poly(C, int(i)));
    std::vector<std::vector<Scalar>> fvals(points.size());
    for (std::size_t k = 0; k < points.size(); ++k) {
        fvals[k].reserve(m);
        for (std::size_t i = 0; i < m; ++i) {
            FqPoly ei_t;
            for (std::size_t j = 0; j < epolys[i].size(); ++j)
                ei_t = fp_add(F, ei_t, fp_mul(F, epolys[i][j], fp_pow_q(F, points[k], int(j))));
            fvals[k].push_back(
                Scalar(ls_from_ratfunc(F, RatFunc{std::move(ei_t), C.D(int(i))}, wprec)));
        }
    }

    for (int it = 0; it < 100; ++it) {
        CarlitzCoeffs c = random_unit_coeffs(F, rng, m);
        if (it % 4 == 1) // scale everything down: the norm need not be 1
            for (auto& ci : c.c) ci = sc_mul(F, ci, sc_from_poly(fp_monomial(1, 1 + it % 2)));
        AbsVal want = norm(c);
        AbsVal best;
        best.zero = true;
        for (std::size_t k = 0; k < points.size(); ++k) {
            Scalar acc = sc_zero();
            for (std::size_t i = 0; i < m; ++i)
                if (!sc_is_zero(c.c[i])) acc = sc_add(F, acc, sc_mul(F, c.c[i], fvals[k][i]));
            AbsVal av = sc_abs(acc);
            if (av_cmp(av, best) > 0) best = av;
        }
        ctx.check(av_cmp(best, want) <= 0 && av_cmp(best, want) == 0,
                  [&] { return "sampled norm " + absval_text(best) + " vs coefficient norm " +
                               absval_text(want) + " for c=" + coeffs_text(F, c); });
    }
    ctx.certify("sampled norms evaluated modulo x^" + std::to_string(wprec));

    // the public operation agrees on a few cases
    for (int it = 0; it < 3; ++it) {
        CarlitzCoeffs c = random_unit_coeffs(F, rng, std::min<std::size_t>(m, 4));
        AbsVal s = sampled_norm(C, c, std::min(bound, 5));
        ctx.check(av_cmp(s, norm(c)) == 0, [&] { return "sampled_norm op vs coefficient norm"; });
    }
}

// ---------------------------------------------------------------- prop2

void suite_prop2(const RunConfig& cfg, Ctx& ctx) {
    Fq F = cfg.make_field();
    const std::int64_t q = F.q();
    auto en = default_enumeration(F);

    const std::uint64_t kmax = 512;
    for (std::uint64_t n = 0; n < kmax; ++n) {
        auto lk = l_and_kappa(F, n, en);
        ctx.check(lk.l == lk.kappa, [&] {
            return "kappa_" + std::to_string(n) + "=" + std::to_string(lk.kappa) +
                   " vs l_" + std::to_string(n) + "=" + std::to_string(lk.l);
        });
    }

    // |c_nn| = 1 and |c_ni| <= 1 in the interpolation expansion
    std::uint64_t nmax = 1;
    while (nmax * std::uint64_t(q) <= 32 && int(nmax * std::uint64_t(q)) <= ipow(q, cfg.imax))
        nmax *= std::uint64_t(q);
    CarlitzCache C(F, cfg.imax);
    for (std::uint64_t n = 0; n < nmax; ++n) {
        auto c = expand_h_in_q(C, n, en);
        bool ok = !c[n].is_zero() && rf_xorder(c[n]) == 0;
        for (std::uint64_t i = 0; ok && i <= n; ++i)
            if (!c[i].is_zero() && rf_xorder(c[i]) < 0) ok = false;
        ctx.check(ok, [&] { return "expansion of h_" + std::to_string(n) + ": c_nn=" +
                                   ratfunc_text(F, c[n]); });
    }

    // |Gamma_n| = q^(-l_n): the digit formula gives the x-order exactly
    for (std::uint64_t n = 0; n < nmax; ++n)
        ctx.check(fp_xorder(h_poly(C, n).gamma) == l_and_kappa(F, n, en).l,
                  [&] { return "x-order of Gamma_" + std::to_string(n); });

    // the postconditions do not depend on the enumeration (meaningful q >= 4)
    if (q >= 4) {
        auto alt = alternative_enumeration(F);
        for (std::uint64_t n = 0; n < 256; ++n) {
            auto a = l_and_kappa(F, n, en);
            auto b = l_and_kappa(F, n, alt);
            ctx.check(a.l == b.l && a.kappa == b.kappa && b.l == b.kappa,
                      [&] { return "enumeration dependence at n=" + std::to_string(n); });
        }
        for (std::uint64_t n = 0; n < std::min<std::uint64_t>(nmax, 16); ++n) {
            auto c = expand_h_in_q(C, n, alt);
            ctx.check(!c[n].is_zero() && rf_xorder(c[n]) == 0,
                      [&] { return "alt-enumeration c_nn at n=" + std::to_string(n); });
        }
    }
}

// ------------------------------------------------------------------ exp

void check_wz_exact(const Fq& F, const CarlitzCache& C, int m, const FqPoly& z,
                    const FqPoly& t, Ctx& ctx) {
    WzTwoRoute r = wz_two_route_exact(C, m, z, t);
    ctx.check(r.tail_ok, [&] {
        return "expansion two-route at z=" + poly_text(F, z) + ", t=" + poly_text(F, t) +
               ": residual exponent " + std::to_string(r.residual_exponent) + " vs tail " +
               std::to_string(r.tail_exponent);
    });
    ctx.check(r.full_ok, [&] {
        return "full expansion identity at z=" + poly_text(F, z) + ", t=" + poly_text(F, t);
    });
}

void suite_exp(const RunConfig& cfg, Ctx& ctx) {
    Fq F = cfg.make_field();
    const std::int64_t q = F.q();
    CarlitzCache C(F, cfg.imax);
    Prng rng(Prng::derive(cfg.seed, "exp"));

    // composition identity at certified precision; a cache too shallow for
    // the target surfaces as precision exhaustion, not as a failed identity
    std::int64_t target = q == 2 ? 32 : (q == 3 ? 27 : 24);
    target = std::min<std::int64_t>(target, cfg.prec);
    std::int64_t vmin = q == 2 ? 2 : 1;
    for (int it = 0; it < 50; ++it) {
        LaurentSeries zeta = random_series_point(F, rng, vmin, vmin + 4, target + 8);
        InverseReport r = verify_inverse(C, zeta, target);
        ctx.check(r.equal && r.prec >= target,
                  [&] { return "composition at zeta=" + laurent_text(F, zeta); });
    }
    ctx.certify("composition identity confirmed modulo x^" + std::to_string(target));

    // valuation bound on the inverse series
    for (int it = 0; it < 50; ++it) {
        LaurentSeries zeta = random_series_point(F, rng, 1, 6, 40);
        LaurentSeries r = rho(C, zeta, 24);
        bool ok = r.is_zero() || r.val >= std::min(zeta.val, q * zeta.val - 1);
        ctx.check(ok, [&] { return "rho bound at zeta=" + laurent_text(F, zeta); });
    }

    // term-size accounting: strictly decreasing sizes inside the domain
    for (int it = 0; it < 10; ++it) {
        std::int64_t v = vmin + std::int64_t(rng.below(4));
        bool mono = true;
        for (int j = 0; j + 1 <= 6; ++j)
            if (exp_term_exponent(q, j + 1, v) <= exp_term_exponent(q, j, v)) mono = false;
        ctx.check(mono, [&] { return "term sizes not decreasing at val " + std::to_string(v); });
    }

    // partial sums are order-independent (exact arithmetic)
    for (int it = 0; it < 5; ++it) {
        RatFunc z = rf_from_poly(random_poly(F, rng, 3));
        RatFunc fwd = carlitz_exp_partial_rat(C, z, 4);
        RatFunc rev;
        for (int j = 4; j >= 0; --j)
            rev = rf_add(F, rev, rf_div(F, rf_pow_q(F, z, j), rf_from_poly(C.D(j))));
        ctx.check(rf_eq(F, fwd, rev), [&] { return "order dependence at z=" + ratfunc_text(F, z); });
    }

    // partial-coefficient identity as exact polynomials
    for (int n2 = 0; n2 <= std::min(5, cfg.imax); ++n2)
        for (int k = 0; k <= n2; ++k)
            ctx.check(wz_partial_identity_holds(C, n2, k),
                      [&] { return "partial coefficient identity at N=" + std::to_string(n2) +
                                   ", n=" + std::to_string(k); });

    // two-route evaluation of the basis expansion
    const int m = q <= 3 ? std::min(cfg.m, 8) : std::min(cfg.m, sum_depth_cap(int(q)));
    std::vector<FqPoly> zs = {parse_poly(F, "x"), parse_poly(F, "x^2"), parse_poly(F, "x+x^2")};
    std::vector<FqPoly> ts = {fp_one(), parse_poly(F, "x"), parse_poly(F, "x+1"),
                              parse_poly(F, "x^2")};
    {
        CarlitzCache Cm(F, m);
        for (const auto& z : zs)
            for (const auto& t : ts) check_wz_exact(F, Cm, m, z, t, ctx);
    }
    ctx.certify("expansion tails certified to exponent q^" + std::to_string(m) + " * val(z)");

    // limit route for an interior argument
    if (q == 2) {
        const std::int64_t w = ipow(q, m) * 2 + 24;
        CarlitzCache Cw(F, 10);
        LaurentSeries z = ls_from_poly(parse_poly(F, "x^2"), w);
        CarlitzCoeffs b = wz_coeffs(Cw, z, std::size_t(m), w);
        for (const auto& t : ts) {
            Scalar route_a = eval_coeffs(Cw, b, sc_from_poly(t));
            LaurentSeries route_b = carlitz_exp(Cw, ls_mul(F, ls_from_poly(t, w), z), w);
            Scalar diff = sc_sub(F, route_a, Scalar(route_b));
            const auto& d = std::get<LaurentSeries>(diff);
            bool ok = d.is_zero() || d.val >= ipow(q, m) * 2;
            ctx.check(ok, [&] { return "limit-route expansion at t=" + poly_text(F, t); });
        }
        ctx.certify("limit route evaluated modulo x^" + std::to_string(w));
    }
}

// ------------------------------------------------------------ oscillator

void suite_oscillator(const RunConfig& cfg, Ctx& ctx) {
    Fq F = cfg.make_field();
    const std::int64_t cap = cfg.effective_ram_cap(F.q());
    const int depth = std::min(cfg.imax, 8);
    CarlitzCache C(F, depth);
    Prng rng(Prng::derive(cfg.seed, "oscillator"));

    // ladder action on the basis
    for (std::size_t i = 1; i <= std::size_t(depth); ++i) {
        CarlitzCoeffs fi = CarlitzCoeffs::unit(i, std::size_t(depth) + 1);
        CarlitzCoeffs fprev = CarlitzCoeffs::unit(i - 1, std::size_t(depth) + 1);

        CarlitzCoeffs dly = delta_coeffs(F, fi);
        ctx.check(coeffs_eq(F, dly, qth_power_coeffs(F, fprev)).equal,
                  [&] { return "delta f_" + std::to_string(i); });

        CarlitzCoeffs up = a_plus(F, fprev);
        CarlitzCoeffs want;
        want.c.assign(up.c.size(), sc_zero());
        want.c[i] = sc_from_poly(bracket_poly(F, int(i)));
        ctx.check(coeffs_eq(F, up, want).equal, [&] { return "a+ f_" + std::to_string(i - 1); });

        CarlitzCoeffs down = a_minus(F, fi, cap);
        ctx.check(coeffs_eq(F, down, CarlitzCoeffs::unit(i - 1, std::size_t(depth))).equal,
                  [&] { return "a- f_" + std::to_string(i); });

        CarlitzCoeffs nop = number_op(F, fi, cap);
        CarlitzCoeffs nwant;
        nwant.c.assign(nop.c.size(), sc_zero());
        nwant.c[i] = sc_from_poly(bracket_poly(F, int(i)));
        ctx.check(coeffs_eq(F, nop, nwant).equal, [&] { return "a+a- f_" + std::to_string(i); });
    }
    {
        CarlitzCoeffs z0 = a_minus(F, CarlitzCoeffs::unit(0, 1), cap);
        ctx.check(z0.c.empty(), "a- f_0 != 0");
        CarlitzCoeffs n0 = number_op(F, CarlitzCoeffs::unit(0, 2), cap);
        bool zero = true;
        for (const auto& v : n0.c) zero = zero && sc_is_zero(v);
        ctx.check(zero, "a+a- f_0 != 0");
    }

    // commutator on seeded coefficient functions
    const std::size_t m = std::size_t(std::min(cfg.m, 6));
    for (int it = 0; it < 100; ++it) {
        CarlitzCoeffs c = random_unit_coeffs(F, rng, m);
        CommutatorReport r = commutator_defect(F, c, cap);
        ctx.check(r.equal && r.k_form_equal,
                  [&] { return "commutator defect at c=" + coeffs_text(F, c); });
    }

    // coefficient rules against the pointwise definitions
    int tdeg = 3;
    auto points = grid(F, tdeg);
    Scalar x = sc_from_poly(parse_poly(F, "x"));
    const std::size_t m2 = std::min<std::size_t>(m, 4);
    for (int it = 0; it < 10; ++it) {
        CarlitzCoeffs c = random_unit_coeffs(F, rng, m2);
        CarlitzCoeffs dc = delta_coeffs(F, c);
        CarlitzCoeffs up = a_plus(F, c);
        CarlitzCoeffs down = a_minus(F, c, cap);
        bool ok = true;
        FqPoly witness;
        for (const auto& t : points) {
            Scalar st = sc_from_poly(t);
            Scalar v = eval_coeffs(C, c, st);
            Scalar vxt = eval_coeffs(C, c, sc_mul(F, x, st));
            Scalar dval = sc_sub(F, vxt, sc_mul(F, x, v));
            if (!sc_eq(F, eval_coeffs(C, dc, st), dval).equal ||
                !sc_eq(F, eval_coeffs(C, up, st), sc_sub(F, sc_frobenius(F, v), v)).equal ||
                !sc_eq(F, eval_coeffs(C, down, st), sc_qth_root(F, dval, cap)).equal) {
                ok = false;
                witness = t;
                break;
            }
        }
        ctx.check(ok, [&] { return "two-route disagreement at t=" + poly_text(F, witness) +
                                   " for c=" + coeffs_text(F, c); });
    }

    // F_q-linearity and continuity
    for (int it = 0; it < 20; ++it) {
        CarlitzCoeffs u = random_unit_coeffs(F, rng, m);
        CarlitzCoeffs v = random_unit_coeffs(F, rng, m);
        CarlitzCoeffs sum;
        for (std::size_t i = 0; i < m; ++i) sum.c.push_back(sc_add(F, u.c[i], v.c[i]));
        bool ok = true;
        {
            CarlitzCoeffs l = a_plus(F, sum);
            CarlitzCoeffs ru = a_plus(F, u), rv = a_plus(F, v);
            for (std::size_t i = 0; ok && i < l.c.size(); ++i)
                ok = sc_eq(F, l.c[i], sc_add(F, ru.c[i], rv.c[i])).equal;
        }
        for (int b = 0; ok && b < F.q(); ++b) {
            Scalar beta = Scalar(RamRat{1, rf_from_poly(fp_const(FqElem(b)))});
            CarlitzCoeffs scaled;
            for (const auto& ci : u.c) scaled.c.push_back(sc_mul(F, beta, ci));
            CarlitzCoeffs l = a_minus(F, scaled, cap);
            CarlitzCoeffs r = a_minus(F, u, cap);
            for (std::size_t i = 0; ok && i < l.c.size(); ++i)
                ok = sc_eq(F, l.c[i], sc_mul(F, beta, r.c[i])).equal;
        }
        AbsVal na = norm(a_minus(F, u, cap));
        ok = ok && av_cmp(na, norm(u)) <= 0;
        ctx.check(ok, [&] { return "linearity/continuity at u=" + coeffs_text(F, u); });
    }
}

// -------------------------------------------------------------- coherent

void suite_coherent(const RunConfig& cfg, Ctx& ctx) {
    Fq F = cfg.make_field();
    const std::int64_t q = F.q();
    const std::int64_t cap = cfg.effective_ram_cap(int(q));
    CarlitzCache C(F, cfg.imax);
    Prng rng(Prng::derive(cfg.seed, "coherent"));

    const std::size_t m = std::size_t(std::min(cfg.m, 8));

    // eigenfunction identity and strict decay
    for (int it = 0; it < 20; ++it) {
        FqPoly lp = random_poly(F, rng, 2);
        lp.c.resize(std::max<std::size_t>(lp.c.size(), 1), 0);
        lp.c[0] = FqElem(1 + rng.below(std::uint64_t(q - 1)));
        FqPoly c0p = fp_shift(random_poly(F, rng, 2), 1);
        if (c0p.is_zero()) c0p = parse_poly(F, "x");
        c0p.c[1] = FqElem(1 + rng.below(std::uint64_t(q - 1)));
        Scalar lambda = sc_from_poly(lp), c0 = sc_from_poly(c0p);

        CarlitzCoeffs u = coherent_state(F, lambda, c0, m);
        CarlitzCoeffs lowered = a_minus(F, u, cap);
        bool ok = true;
        for (std::size_t i = 0; ok && i + 1 < u.c.size(); ++i)
            ok = sc_eq(F, lowered.c[i], sc_mul(F, lambda, u.c[i])).equal;
        for (std::size_t i = 0; ok && i + 1 < u.c.size(); ++i)
            ok = av_cmp(sc_abs(u.c[i + 1]), sc_abs(u.c[i])) < 0;
        ctx.check(ok, [&] { return "eigen/decay at lambda=" + poly_text(F, lp) +
                                   ", c0=" + poly_text(F, c0p); });
    }

    // closed form on the nu-subfamily
    for (int it = 0; it < 10; ++it) {
        FqPoly nup = random_poly(F, rng, 2);
        nup.c.resize(std::max<std::size_t>(nup.c.size(), 1), 0);
        nup.c[0] = FqElem(1 + rng.below(std::uint64_t(q - 1)));
        Scalar nu = sc_from_poly(nup);
        Scalar lambda = sc_from_int(F, 1);
        for (int k = 0; k < q - 1; ++k) lambda = sc_mul(F, lambda, nu);
        Scalar mu = sc_mul(F, lambda, nu); // nu^q
        FqPoly c0p = fp_shift(random_poly(F, rng, 2), 1);
        if (c0p.is_zero()) c0p = parse_poly(F, "x");
        Scalar c0 = sc_from_poly(c0p);

        CarlitzCoeffs u = coherent_state(F, lambda, c0, m);
        Scalar c0mu = sc_mul(F, c0, mu);
        Scalar mu_inv = sc_from_ratfunc(rf_inv(F, std::get<RamRat>(mu).r));
        bool ok = true;
        for (std::size_t n = 0; ok && n < u.c.size(); ++n)
            ok = sc_eq(F, u.c[n], sc_mul(F, mu_inv, sc_pow_q(F, c0mu, int(n)))).equal;
        ctx.check(ok, [&] { return "closed form at nu=" + poly_text(F, nup) +
                                   ", c0=" + poly_text(F, c0p); });
    }

    // pointwise identity through the exponential: with c = c0*mu, |c| <= q^-2,
    //   sum_n c^(q^n) f_n(t) = exp(t rho(c)) below the working precision
    std::int64_t w = std::min<std::int64_t>(cfg.prec, 64);
    int mchk = 1;
    while (ipow(q, mchk) * 2 < w && mchk < cfg.imax) ++mchk;
    w = std::min(w, ipow(q, mchk) * 2); // the omitted tail must stay below w
    std::vector<FqPoly> ts = {fp_one(), parse_poly(F, "x"), parse_poly(F, "x+1"),
                              parse_poly(F, "x^2")};
    for (int it = 0; it < 20; ++it) {
        FqPoly cp = fp_shift(random_poly(F, rng, 2), 2);
        if (cp.is_zero()) cp = parse_poly(F, "x^2");
        cp.c[2] = FqElem(1 + rng.below(std::uint64_t(q - 1))); // val exactly 2
        LaurentSeries cs = ls_from_poly(cp, w + 8);
        LaurentSeries z = rho(C, cs, w);
        bool ok = true;
        for (const auto& t : ts) {
            Scalar acc = sc_zero();
            Scalar cq = sc_from_poly(cp);
            auto fv = basis_values(C, sc_from_poly(t), std::size_t(mchk));
            for (int n = 0; n < mchk; ++n) {
                if (n > 0) cq = sc_frobenius(F, cq);
                acc = sc_add(F, acc, sc_mul(F, cq, fv[std::size_t(n)]));
            }
            LaurentSeries direct = carlitz_exp(C, ls_mul(F, ls_from_poly(t, w), z), w);
            Scalar diff = sc_sub(F, acc, Scalar(direct));
            if (!sc_is_zero(diff)) ok = false;
        }
        ctx.check(ok, [&] { return "exponential route at c=" + poly_text(F, cp); });
    }
    ctx.certify("exponential route confirmed modulo x^" + std::to_string(w));

    // data outside the decay region is refused
    {
        bool threw = false;
        try {
            coherent_state(F, sc_from_ratfunc(parse_ratfunc(F, "1/x")), sc_from_poly(parse_poly(F, "x")), 4);
        } catch (const domain_error&) {
            threw = true;
        }
        ctx.check(threw, "divergent coherent data accepted");
    }
}

} // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {"basis",      "orthonormal", "prop2",
                                                   "exp",        "oscillator",  "coherent"};
    return names;
}

SuiteReport run_suite(const RunConfig& cfg, const std::string& name) {
    Ctx ctx;
    ctx.rep.suite = name;
    ctx.rep.seed = cfg.seed;
    auto t0 = std::chrono::steady_clock::now();
    try {
        if (name == "basis")
            suite_basis(cfg, ctx);
        else if (name == "orthonormal")
            suite_orthonormal(cfg, ctx);
        else if (name == "prop2")
            suite_prop2(cfg, ctx);
        else if (name == "exp")
            suite_exp(cfg, ctx);
        else if (name == "oscillator")
            suite_oscillator(cfg, ctx);
        else if (name == "coherent")
            suite_coherent(cfg, ctx);
        else
            throw domain_error("unknown suite: " + name +
                               " (expected basis|orthonormal|prop2|exp|oscillator|coherent|all)");
    } catch (const internal_error& e) {
        ctx.rep.aborted = true;
        ++ctx.rep.cases;
        if (ctx.rep.counterexample.empty())
            ctx.rep.counterexample = std::string("internal consistency: ") + e.what();
    }
    auto t1 = std::chrono::steady_clock::now();
    ctx.rep.wall_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    return ctx.rep;
}

nlohmann::json report_json(const SuiteReport& r, bool timings) {
    nlohmann::json j{{"suite", r.suite},
                     {"cases", r.cases},
                     {"passed", r.passed},
                     {"aborted", r.aborted},
                     {"seed", r.seed},
                     {"counterexample", r.counterexample.empty()
                                            ? nlohmann::json(nullptr)
                                            : nlohmann::json(r.counterexample)},
                     {"certified", r.certified}};
    if (timings) j["wall_ms"] = r.wall_ms;
    return j;
}

std::string report_text(const SuiteReport& r, bool timings) {
    std::string s = "suite " + r.suite + ": " + std::to_string(r.passed) + "/" +
                    std::to_string(r.cases) + " cases passed (seed " + std::to_string(r.seed) +
                    ")";
    if (r.aborted) s += " [aborted]";
    s += "\n";
    for (const auto& c : r.certified) s += "  certified: " + c + "\n";
    if (!r.counterexample.empty()) s += "  counterexample: " + r.counterexample + "\n";
    if (timings) s += "  wall_ms: " + std::to_string(r.wall_ms) + "\n";
    return s;
}

} // namespace carlitz
