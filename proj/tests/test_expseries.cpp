#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "carlitz/expseries.hpp"
#include "carlitz/prng.hpp"

using namespace carlitz;

namespace {

FqPoly poly(std::vector<FqElem> c) { return FqPoly(std::move(c)); }

LaurentSeries random_point(const Fq& F, Prng& rng, std::int64_t vmin, std::int64_t vmax,
                           std::int64_t prec) {
    std::int64_t v = vmin + std::int64_t(rng.below(std::uint64_t(vmax - vmin + 1)));
    std::vector<FqElem> c;
    c.push_back(FqElem(1 + rng.below(std::uint64_t(F.q() - 1))));
    for (int k = 0; k < 6; ++k) c.push_back(FqElem(rng.below(std::uint64_t(F.q()))));
    return ls_make(1, v, std::move(c), prec);
}

} // namespace

TEST_CASE("exponential: zero, leading term, domain") {
    Fq F2(2, 1), F3(3, 1);
    CarlitzCache C2(F2, 8), C3(F3, 8);

    CHECK(carlitz_exp(C2, ls_zero(10), 8).is_zero());

    // val(exp(z)) = val(z): the first term dominates
    Prng rng(Prng::derive(31, "lead"));
    for (int it = 0; it < 30; ++it) {
        LaurentSeries z2 = random_point(F2, rng, 2, 5, 40);
        CHECK(carlitz_exp(C2, z2, 24).val == z2.val);
        LaurentSeries z3 = random_point(F3, rng, 1, 5, 40);
        CHECK(carlitz_exp(C3, z3, 24).val == z3.val);
    }

    // strict domain: |z| < q^(-1/(q-1)); q=2 rejects val 1, q=3 accepts it
    CHECK_THROWS_AS(carlitz_exp(C2, ls_from_poly(poly({0, 1}), 16), 8), domain_error);
    CHECK_THROWS_AS(carlitz_exp(C2, ls_from_poly(fp_one(), 16), 8), domain_error);
    CHECK(carlitz_exp(C3, ls_from_poly(poly({0, 1}), 16), 8).val == 1);

    // ramified arguments are refused
    CHECK_THROWS_AS(carlitz_exp(C2, ls_monomial(1, 5, 2, 20), 8), domain_error);

    // refusal instead of under-delivery: argument precision below the target
    CHECK_THROWS_AS(carlitz_exp(C2, ls_from_poly(poly({0, 0, 1}), 8), 24), precision_error);
    // and a cache too shallow for the tail
    CarlitzCache tiny(F2, 2);
    CHECK_THROWS_AS(carlitz_exp(tiny, ls_from_poly(poly({0, 0, 1}), 64), 48), precision_error);
}

TEST_CASE("partial sums are order-independent and exact") {
    Fq F(2, 1);
    CarlitzCache C(F, 6);

    // forward partial sum of the exact rational argument x
    RatFunc x = rf_from_poly(poly({0, 1}));
    RatFunc fwd = carlitz_exp_partial_rat(C, x, 4);

    // reversed-order summation, exact arithmetic
    RatFunc rev;
    for (int j = 4; j >= 0; --j)
        rev = rf_add(F, rev, rf_div(F, rf_pow_q(F, x, j), rf_from_poly(C.D(j))));
    CHECK(rf_eq(F, fwd, rev));

    // the series form agrees with the exact form where both are defined
    LaurentSeries sp = carlitz_exp_partial(C, ls_from_poly(poly({0, 1}), 12), 4);
    LaurentSeries se = ls_from_ratfunc(F, fwd, sp.prec);
    CHECK(ls_eq(F, sp, se).equal);
}

TEST_CASE("rho: zero, leading term, bound") {
    Fq F2(2, 1), F3(3, 1);
    CarlitzCache C2(F2, 8), C3(F3, 8);

    CHECK(rho(C2, ls_zero(9), 9).is_zero());

    // first-term domination strictly inside the composition domain
    Prng rng(Prng::derive(32, "rho"));
    for (int it = 0; it < 30; ++it) {
        LaurentSeries z = random_point(F2, rng, 2, 5, 40);
        LaurentSeries r = rho(C2, z, 24);
        CHECK(r.val == z.val);
        LaurentSeries z3 = random_point(F3, rng, 1, 5, 40);
        CHECK(rho(C3, z3, 24).val == z3.val);
    }

    // q=2 boundary: x is killed by the module action x*u + u^2, and the
    // logarithm vanishes on it
    LaurentSeries rx = rho(C2, ls_from_poly(poly({0, 1}), 40), 12);
    CHECK(rx.is_zero());

    CHECK_THROWS_AS(rho(C2, ls_from_poly(fp_one(), 12), 8), domain_error);
    CHECK(rho(C3, ls_from_poly(poly({0, 1}), 20), 12).val == 1);
}

TEST_CASE("composition identity at certified precision") {
    Fq F2(2, 1), F3(3, 1);
    CarlitzCache C2(F2, 8), C3(F3, 8);

    // zero composes to zero
    InverseReport r0 = verify_inverse(C2, ls_zero(12), 12);
    CHECK(r0.equal);

    InverseReport r1 = verify_inverse(C2, ls_from_poly(poly({0, 0, 1}), 20), 16);
    CHECK(r1.equal);
    CHECK(r1.prec >= 16);

    InverseReport r2 = verify_inverse(C3, ls_from_poly(poly({0, 1}), 20), 16);
    CHECK(r2.equal);

    // boundary arguments are rejected up front for q=2
    CHECK_THROWS_AS(verify_inverse(C2, ls_from_poly(poly({0, 1}), 40), 16), domain_error);

    Prng rng(Prng::derive(33, "inv"));
    for (int it = 0; it < 50; ++it) {
        LaurentSeries z2 = random_point(F2, rng, 2, 5, 40);
        InverseReport a = verify_inverse(C2, z2, 32);
        CHECK(a.equal);
        CHECK(a.prec >= 32);
        LaurentSeries z3 = random_point(F3, rng, 1, 5, 40);
        InverseReport b = verify_inverse(C3, z3, 27);
        CHECK(b.equal);
        CHECK(b.prec >= 27);
    }
}

TEST_CASE("basis expansion of t -> exp(tz)") {
    Fq F(2, 1);
    CarlitzCache C(F, 10);
    const std::int64_t w = 80; // past the n=4 tail exponent 2^4 * 2 = 32

    LaurentSeries z = ls_from_poly(poly({0, 0, 1}), w); // x^2, inside the domain
    CarlitzCoeffs b = wz_coeffs(C, z, 4, w);

    // b_0 = exp(z)
    CHECK(ls_eq(F, std::get<LaurentSeries>(b.c[0]), carlitz_exp(C, z, w)).equal);

    // zero argument gives the zero function
    CarlitzCoeffs bz = wz_coeffs(C, ls_zero(10), 4, 10);
    for (const auto& v : bz.c) CHECK(sc_is_zero(v));

    // two-route check: the basis expansion evaluated at t agrees with
    // exp(t z) below the first omitted basis term |exp(z)|^(q^M) = 2^-32
    for (const FqPoly& tp : {fp_one(), poly({0, 1}), poly({1, 1}), poly({0, 0, 1})}) {
        Scalar t = sc_from_poly(tp);
        Scalar route_a = eval_coeffs(C, b, t);
        LaurentSeries tz = ls_mul(F, ls_from_poly(tp, w), z);
        LaurentSeries route_b = carlitz_exp(C, tz, w);
        Scalar diff = sc_sub(F, route_a, Scalar(route_b));
        const auto& d = std::get<LaurentSeries>(diff);
        CHECK((d.is_zero() || d.val >= 32));
    }
}

TEST_CASE("partial coefficients of the expansion") {
    for (int p : {2, 3}) {
        Fq F(p, 1);
        CarlitzCache C(F, 6);

        // n = 0 is the truncation itself
        LinearPoly b0 = wz_partial_poly(C, 5, 0);
        LinearPoly ec = exp_linear_truncation(C, 5);
        REQUIRE(b0.u.size() == ec.u.size());
        for (std::size_t k = 0; k < b0.u.size(); ++k)
            CHECK(sc_eq(F, b0.u[k], ec.u[k]).equal);

        // exact polynomial identity for all n <= N <= 5
        for (int N = 0; N <= 5; ++N)
            for (int n = 0; n <= N; ++n) CHECK(wz_partial_identity_holds(C, N, n));

        // collapse at n = N: b_N^(N) is the q^N-th power monomial
        LinearPoly top = wz_partial_poly(C, 4, 4);
        for (std::size_t k = 0; k < 4; ++k) CHECK(sc_is_zero(top.u[k]));
        CHECK(sc_eq(F, top.u[4], sc_from_int(F, 1)).equal);
    }
}
