#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "carlitz/basis.hpp"
#include "carlitz/prng.hpp"

using namespace carlitz;

namespace {

FqPoly poly(std::vector<FqElem> c) { return FqPoly(std::move(c)); }

std::int64_t ipow(std::int64_t b, int e) {
    std::int64_t r = 1;
    while (e-- > 0) r *= b;
    return r;
}

// Evaluate an F_q-linear coefficient list sum u_j t^(q^j) at a polynomial.
FqPoly eval_linear(const Fq& F, const std::vector<FqPoly>& u, const FqPoly& t) {
    FqPoly acc;
    for (std::size_t j = 0; j < u.size(); ++j)
        acc = fp_add(F, acc, fp_mul(F, u[j], fp_pow_q(F, t, int(j))));
    return acc;
}

// Dense-in-t form of a linear coefficient list, for comparison with the oracle.
PolyFq linear_to_dense(const Fq& F, const std::vector<FqPoly>& u) {
    PolyFq d;
    if (u.empty()) return d;
    d.c.assign(std::size_t(ipow(F.q(), int(u.size()) - 1)) + 1, FqPoly());
    for (std::size_t j = 0; j < u.size(); ++j)
        d.c[std::size_t(ipow(F.q(), int(j)))] = u[j];
    d.trim();
    return d;
}

} // namespace

TEST_CASE("brackets") {
    Fq F2(2, 1), F3(3, 1);
    CarlitzCache C2(F2, 4), C3(F3, 3);
    CHECK(C2.bracket(1) == poly({0, 1, 1}));       // x^2+x
    CHECK(C3.bracket(1) == poly({0, 2, 0, 1}));    // x^3+2x
    CHECK(C2.bracket(2) == poly({0, 1, 0, 0, 1})); // x^4+x
    CHECK_THROWS_AS(C2.bracket(0), domain_error);
}

TEST_CASE("factorials and their x-orders") {
    Fq F(2, 1);
    CarlitzCache C(F, 10);
    CHECK(C.D(1) == poly({0, 1, 1}));
    CHECK(C.L(1) == poly({0, 1, 1}));
    // D_2 = (x^4+x)(x^2+x)^2 = x^8+x^6+x^5+x^3
    CHECK(C.D(2) == poly({0, 0, 0, 1, 0, 1, 1, 0, 1}));
    // L_2 = (x^4+x)(x^2+x) = x^6+x^5+x^3+x^2
    CHECK(C.L(2) == poly({0, 0, 1, 1, 0, 1, 1}));
    for (int i = 0; i <= 10; ++i) {
        CHECK(fp_xorder(C.D(i)) == (ipow(2, i) - 1) / (2 - 1));
        CHECK(fp_xorder(C.L(i)) == i);
    }
}

TEST_CASE("carlitz binomials are exact polynomial quotients") {
    Fq F(2, 1);
    CarlitzCache C(F, 6);
    for (int i = 0; i <= 6; ++i) {
        CHECK(C.binom(i, i) == fp_one());
        CHECK(C.binom(i, 0) == fp_div_exact(F, C.D(i), C.L(i)));
    }
    CHECK(C.binom(1, 0) == fp_one());
    CHECK(C.binom(2, 1) == poly({1, 1, 1})); // (x^4+x)/(x^2+x)
}

TEST_CASE("e via binomial sum matches small closed forms") {
    Fq F2(2, 1), F3(3, 1);
    CarlitzCache C2(F2, 4), C3(F3, 2);

    auto e0 = e_poly(C2, 0);
    REQUIRE(e0.size() == 1);
    CHECK(e0[0] == fp_one()); // e_0 = t

    auto e1 = e_poly(C2, 1);
    CHECK(e1[0] == fp_one());
    CHECK(e1[1] == fp_one()); // t^2 + t

    auto e1_3 = e_poly(C3, 1); // t^3 - t
    CHECK(e1_3[0] == poly({2}));
    CHECK(e1_3[1] == fp_one());
}

TEST_CASE("product oracle equals the binomial sum") {
    Fq F2(2, 1), F3(3, 1);
    CarlitzCache C2(F2, 5), C3(F3, 3);

    CHECK(e_product_oracle(F2, 0).c == PolyFq{{FqPoly(), fp_one()}}.c);
    CHECK(e_product_oracle(F2, 1).c == linear_to_dense(F2, e_poly(C2, 1)).c);

    for (int i = 0; i <= 5; ++i)
        CHECK(e_product_oracle(F2, i).c == linear_to_dense(F2, e_poly(C2, i)).c);
    for (int i = 0; i <= 3; ++i)
        CHECK(e_product_oracle(F3, i).c == linear_to_dense(F3, e_poly(C3, i)).c);

    CHECK_THROWS_AS(e_product_oracle(F2, 13), domain_error);
}

TEST_CASE("e_i vanishes on arguments of lower degree") {
    Fq F(2, 1);
    CarlitzCache C(F, 4);
    for (int i = 1; i <= 4; ++i) {
        auto e = e_poly(C, i);
        for (std::int64_t idx = 0; idx < ipow(2, i); ++idx) {
            FqPoly m;
            std::int64_t v = idx;
            for (int k = 0; k < i; ++k) {
                m.c.push_back(FqElem(v % 2));
                v /= 2;
            }
            m.trim();
            CHECK(eval_linear(F, e, m).is_zero());
        }
    }
}

TEST_CASE("ladder recurrence for e") {
    // e_i = e_{i-1}^q - D_{i-1}^(q-1) e_{i-1}
    for (int p : {2, 3}) {
        Fq F(p, 1);
        CarlitzCache C(F, 4);
        for (int i = 1; i <= 4; ++i) {
            auto prev = e_poly(C, i - 1);
            auto cur = e_poly(C, i);
            FqPoly dq = fp_pow(F, C.D(i - 1), std::uint64_t(F.q() - 1));
            std::vector<FqPoly> rhs(std::size_t(i) + 1);
            for (std::size_t j = 0; j < prev.size(); ++j) {
                rhs[j + 1] = fp_add(F, rhs[j + 1], fp_pow_q(F, prev[j], 1));
                rhs[j] = fp_sub(F, rhs[j], fp_mul(F, dq, prev[j]));
            }
            for (std::size_t j = 0; j <= std::size_t(i); ++j) CHECK(cur[j] == rhs[j]);
        }
    }
}

TEST_CASE("f is e scaled by the inverse factorial") {
    Fq F(2, 1);
    CarlitzCache C(F, 4);

    auto f0 = f_poly(C, 0);
    REQUIRE(f0.size() == 1);
    CHECK(rf_eq(F, f0[0], rf_one())); // f_0 = t

    auto f1 = f_poly(C, 1);
    CHECK(rf_eq(F, f1[0], rf_make(F, fp_one(), poly({0, 1, 1}))));
    CHECK(rf_eq(F, f1[1], rf_make(F, fp_one(), poly({0, 1, 1}))));

    // f_1(x) = (x^2+x)/(x^2+x) = 1
    RatFunc val = rf_add(F, rf_mul(F, f1[0], rf_from_poly(poly({0, 1}))),
                          rf_mul(F, f1[1], rf_from_poly(poly({0, 0, 1}))));
    CHECK(rf_eq(F, val, rf_one()));

    // cross-check the closed-form coefficients against e_i / D_i
    for (int i = 0; i <= 4; ++i) {
        auto e = e_poly(C, i);
        auto f = f_poly(C, i);
        for (int j = 0; j <= i; ++j)
            CHECK(rf_eq(F, f[std::size_t(j)], rf_make(F, e[std::size_t(j)], C.D(i))));
    }
}

TEST_CASE("h basis") {
    Fq F(2, 1);
    CarlitzCache C(F, 5);

    auto h0 = h_poly(C, 0);
    CHECK(h0.h.deg() == 0);
    CHECK(rf_eq(F, h0.h.c[0], rf_one()));
    CHECK(h0.gamma == fp_one());

    auto h1 = h_poly(C, 1);
    CHECK(h1.h.deg() == 1);
    CHECK(rf_eq(F, h1.h.c[1], rf_one()));

    // h_3 = e_0 e_1 / D_1 = (t^3+t^2)/(x^2+x)
    auto h3 = h_poly(C, 3);
    CHECK(h3.gamma == poly({0, 1, 1}));
    CHECK(h3.g.c[3] == fp_one());
    CHECK(h3.g.c[2] == fp_one());
    CHECK(fp_xorder(h3.gamma) == 1); // |Gamma_3| = q^(-l_3), l_3 = 1

    // h_{q^i} = f_i and deg h_j = j
    for (int i = 0; i <= 3; ++i) {
        auto h = h_poly(C, std::uint64_t(ipow(2, i)));
        auto f = f_poly(C, i);
        CHECK(h.h.deg() == ipow(2, i));
        for (int j = 0; j <= i; ++j)
            CHECK(rf_eq(F, h.h.c[std::size_t(ipow(2, j))], f[std::size_t(j)]));
    }
    for (std::uint64_t j = 0; j < 16; ++j) CHECK(h_poly(C, j).h.deg() == std::int64_t(j));
}

TEST_CASE("m sequence") {
    Fq F2(2, 1), F3(3, 1);
    auto en2 = default_enumeration(F2);
    auto en3 = default_enumeration(F3);

    CHECK(m_seq(F2, 0, en2).is_zero());
    CHECK(m_seq(F2, 1, en2) == fp_one());
    CHECK(m_seq(F2, 2, en2) == poly({0, 1}));
    CHECK(m_seq(F2, 3, en2) == poly({1, 1}));
    CHECK(m_seq(F3, 1, en3) == fp_one());
    CHECK(m_seq(F3, 5, en3) == poly({2, 1})); // 5 = 2 + 1*3

    // bijective onto polynomials of degree < 3 for q=2
    std::vector<FqPoly> seen;
    for (std::uint64_t j = 0; j < 8; ++j) {
        FqPoly m = m_seq(F2, j, en2);
        CHECK(m.deg() < 3);
        for (const auto& s : seen) CHECK(!(s == m));
        seen.push_back(m);
    }
}

TEST_CASE("interpolation basis Q") {
    Fq F(2, 1);
    auto en = default_enumeration(F);

    auto q0 = q_poly(F, 0, en);
    CHECK(q0.p.deg() == 0);
    CHECK(q0.p_at_m == fp_one());

    auto q1 = q_poly(F, 1, en); // P_1 = t, P_1(m_1) = 1
    CHECK(q1.p.deg() == 1);
    CHECK(q1.p_at_m == fp_one());

    auto q2 = q_poly(F, 2, en); // P_2 = t^2+t, P_2(x) = x^2+x
    CHECK(q2.p.c[1] == fp_one());
    CHECK(q2.p.c[2] == fp_one());
    CHECK(q2.p_at_m == poly({0, 1, 1}));

    // Q_j(m_k) = 0 for k < j, = 1 at k = j
    for (std::uint64_t j = 0; j <= 6; ++j) {
        auto qq = q_poly(F, j, en);
        for (std::uint64_t k = 0; k < j; ++k)
            CHECK(tp_eval(F, qq.p, m_seq(F, k, en)).is_zero());
        CHECK(tp_eval(F, qq.p, m_seq(F, j, en)) == qq.p_at_m);
    }
}

TEST_CASE("h expanded in the interpolation basis") {
    Fq F(2, 1);
    CarlitzCache C(F, 5);
    auto en = default_enumeration(F);

    // h_1 = t = Q_1
    auto c1 = expand_h_in_q(C, 1, en);
    REQUIRE(c1.size() == 2);
    CHECK(c1[0].is_zero());
    CHECK(rf_eq(F, c1[1], rf_one()));

    // leading coefficient c_nn = Gamma_n^{-1} P_n(m_n); for n=3 it equals 1
    auto c3 = expand_h_in_q(C, 3, en);
    CHECK(rf_eq(F, c3[3], rf_one()));

    for (std::uint64_t n = 0; n < 16; ++n) {
        auto c = expand_h_in_q(C, n, en);
        for (const auto& ci : c)
            if (!ci.is_zero()) CHECK(rf_xorder(ci) >= 0); // |c_ni| <= 1
        CHECK(rf_xorder(c[n]) == 0); // |c_nn| = 1

        // reconstruction: sum c_i Q_i(m_k) = h_n(m_k) at all nodes
        auto h = h_poly(C, n);
        for (std::uint64_t k = 0; k <= n; ++k) {
            FqPoly mk = m_seq(F, k, en);
            RatFunc lhs;
            for (std::uint64_t i = 0; i <= n; ++i) {
                auto qi = q_poly(F, i, en);
                lhs = rf_add(F, lhs,
                             rf_mul(F, c[i], rf_make(F, tp_eval(F, qi.p, mk), qi.p_at_m)));
            }
            CHECK(rf_eq(F, lhs, tr_eval(F, h.h, mk)));
        }
    }
}

TEST_CASE("depth guards") {
    Fq F(2, 1);
    CarlitzCache C(F, 3);
    CHECK_THROWS_AS(C.D(4), domain_error);
    CHECK_THROWS_AS(C.binom(4, 1), domain_error);
    CHECK_THROWS_AS(h_poly(C, 16), domain_error); // digits reach e_4
    CHECK(h_poly(C, 15).h.deg() == 15);           // digits stop at e_3

    // a depth-0 cache still carries the empty products
    CarlitzCache C0(F, 0);
    CHECK(C0.D(0) == fp_one());
    CHECK(C0.L(0) == fp_one());
    CHECK(h_poly(C0, 0).h.deg() == 0);
}

TEST_CASE("digit formula equals the direct valuation") {
    Fq F2(2, 1), F3(3, 1);
    auto en2 = default_enumeration(F2);
    auto en3 = default_enumeration(F3);

    CHECK(l_and_kappa(F2, 0, en2).l == 0);
    CHECK(l_and_kappa(F2, 0, en2).kappa == 0);
    CHECK(l_and_kappa(F2, 1, en2).l == 0);
    CHECK(l_and_kappa(F2, 1, en2).kappa == 0);

    auto lk3 = l_and_kappa(F2, 3, en2);
    CHECK(lk3.l == 1);
    CHECK(lk3.kappa == 1);

    auto lk9 = l_and_kappa(F3, 9, en3);
    CHECK(lk9.l == 4);
    CHECK(lk9.kappa == 4);

    for (std::uint64_t n = 0; n < 128; ++n) {
        auto a = l_and_kappa(F2, n, en2);
        CHECK(a.l == a.kappa);
        auto b = l_and_kappa(F3, n, en3);
        CHECK(b.l == b.kappa);
    }

    // enumeration choice does not move the valuations
    Fq F4(2, 2);
    auto en4 = default_enumeration(F4);
    auto alt4 = alternative_enumeration(F4);
    CHECK(alt4.order != en4.order);
    CHECK(alt4.order[0] == en4.order[0]);
    CHECK(alt4.order[1] == en4.order[1]);
    for (std::uint64_t n = 0; n < 64; ++n) {
        auto a = l_and_kappa(F4, n, en4);
        auto b = l_and_kappa(F4, n, alt4);
        CHECK(a.l == b.l);
        CHECK(a.kappa == b.kappa);
        CHECK(a.l == a.kappa);
    }
}
