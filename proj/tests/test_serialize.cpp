#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "carlitz/cache.hpp"
#include "carlitz/prng.hpp"
#include "carlitz/serialize.hpp"

using namespace carlitz;

namespace {

FqPoly poly(std::vector<FqElem> c) { return FqPoly(std::move(c)); }

} // namespace

TEST_CASE("polynomial text") {
    Fq F2(2, 1), F3(3, 1), F4(2, 2);
    CHECK(poly_text(F2, FqPoly()) == "0");
    CHECK(poly_text(F2, fp_one()) == "1");
    CHECK(poly_text(F2, poly({0, 1, 0, 0, 1})) == "x^4+x");
    CHECK(poly_text(F3, poly({0, 2, 0, 1})) == "x^3+2*x");
    CHECK(poly_text(F4, poly({2, 3, 1})) == "x^2+[1,1]*x+[0,1]");
}

TEST_CASE("polynomial parsing round-trips") {
    for (auto [p, gamma] : {std::pair{2, 1}, {3, 1}, {2, 2}, {5, 1}}) {
        Fq F(p, gamma);
        Prng rng(Prng::derive(41, "parse" + std::to_string(p * 10 + gamma)));
        for (int it = 0; it < 100; ++it) {
            std::vector<FqElem> c(rng.below(9));
            for (auto& v : c) v = FqElem(rng.below(std::uint64_t(F.q())));
            FqPoly a(std::move(c));
            CHECK(parse_poly(F, poly_text(F, a)) == a);
        }
    }

    Fq F(2, 1);
    CHECK(parse_poly(F, "x^4 + x") == poly({0, 1, 0, 0, 1}));
    CHECK(parse_poly(F, "1+x") == poly({1, 1}));
    CHECK(parse_poly(F, "0") == FqPoly());
    CHECK(parse_poly(F, "x+x") == FqPoly()); // coefficients combine mod p
    CHECK_THROWS_AS(parse_poly(F, "x^-2"), domain_error);
    CHECK_THROWS_AS(parse_poly(F, "x + q"), domain_error);

    Fq F3(3, 1);
    CHECK(parse_poly(F3, "-x") == poly({0, 2}));
    CHECK(parse_poly(F3, "x^3-x") == poly({0, 2, 0, 1}));
}

TEST_CASE("rational text and parsing") {
    Fq F(2, 1);
    // (x^2+x)/(x^4+x) reduces to canonical form first
    RatFunc r = rf_make(F, poly({0, 1, 1}), poly({0, 1, 0, 0, 1}));
    std::string s = ratfunc_text(F, r);
    CHECK(s == "(1)/(x^2+x+1)");
    CHECK(rf_eq(F, parse_ratfunc(F, s), r));
    CHECK(rf_eq(F, parse_ratfunc(F, "(x^2+x)/(x^4+x)"), r));
    CHECK(rf_eq(F, parse_ratfunc(F, "x^2+x"), rf_from_poly(poly({0, 1, 1}))));
    CHECK(rf_eq(F, parse_ratfunc(F, "1/x"), rf_make(F, fp_one(), poly({0, 1}))));
    CHECK_THROWS_AS(parse_ratfunc(F, "x/0"), domain_error);
}

TEST_CASE("series text and JSON round-trip") {
    Fq F(2, 1);
    LaurentSeries s = ls_make(1, -1, {1, 1, 1, 1}, 3);
    CHECK(laurent_text(F, s) == "x^(-1)*(1+x+x^2+x^3) + O(x^3)");
    CHECK(laurent_text(F, ls_zero(5)) == "O(x^5)");

    LaurentSeries ram = ls_make(2, 1, {1, 1}, 3);
    CHECK(laurent_text(F, ram) == "x^(1/2)*(1+x^(1/2)) + O(x^(3/2))");

    Prng rng(Prng::derive(42, "lsjson"));
    for (int it = 0; it < 100; ++it) {
        std::vector<FqElem> c(rng.below(8));
        for (auto& v : c) v = FqElem(rng.below(2));
        std::int64_t val = std::int64_t(rng.below(9)) - 4;
        LaurentSeries a = ls_make(1, val, std::move(c), val + 8);
        LaurentSeries b = laurent_from_json(F, laurent_json(F, a));
        CHECK(ls_eq(F, a, b).equal);
        CHECK(a.val == b.val);
        CHECK(a.prec == b.prec);
    }

    // gamma > 1 coefficients serialize as digit lists
    Fq F4(2, 2);
    LaurentSeries s4 = ls_make(1, 0, {3, 2}, 2);
    nlohmann::json j = laurent_json(F4, s4);
    CHECK(j["coeffs"][0] == nlohmann::json({1, 1}));
    LaurentSeries back = laurent_from_json(F4, j);
    CHECK(ls_eq(F4, back, s4).equal);
}

TEST_CASE("bivariate and scalar text") {
    Fq F(2, 1);
    PolyFq e2;
    e2.c = {FqPoly(), poly({0, 1, 1}), poly({1, 1, 1}), FqPoly(), fp_one()};
    CHECK(tpoly_text(F, e2) == "t^4+(x^2+x+1)*t^2+(x^2+x)*t");
    CHECK(tpoly_text(F, PolyFq{{fp_one(), poly({0, 0, 1})}}) == "x^2*t+1");
    CHECK(tpoly_text(F, PolyFq{}) == "0");

    // exact ramified scalar: x - x^(1/2) over F_2
    RamRat root{2, rf_from_poly(poly({0, 1, 1}))};
    CHECK(scalar_text(F, Scalar(root)) == "x^(2/2)+x^(1/2)");

    CHECK(absval_text(AbsVal{false, 3, 2, {}}) == "q^(-3/2)");
    CHECK(absval_text(AbsVal{false, -1, 1, {}}) == "q^(1)");
}
