#include "oracles.hpp"

#include "rootnum/errors.hpp"
#include "rootnum/poly.hpp"
#include "rootnum/polytext.hpp"

#include <doctest.h>

using namespace rootnum;

namespace {

IntPoly random_poly(int deg, std::int64_t bound) {
    std::vector<Integer> c;
    for (int i = 0; i <= deg; ++i) c.emplace_back(std::to_string(oracle::uniform(-bound, bound)));
    if (c.back() == 0) c.back() = 1;
    return IntPoly(c);
}

}  // namespace

TEST_SUITE("poly") {

TEST_CASE("resultant examples") {
    CHECK(resultant(IntPoly{1, 0, 1}, IntPoly{1, 1}) == 2);
    const IntPoly f{1, 2, 0, 1};
    CHECK(resultant(f, f) == 0);
    for (long a : {-3, 0, 5})
        for (long b : {-2, 1, 7}) CHECK(resultant(IntPoly{-a, 1}, IntPoly{-b, 1}) == a - b);
}

TEST_CASE("discriminants") {
    CHECK(discriminant(IntPoly{2, 0, 0, 1}) == -108);
    for (long b = -5; b <= 5; ++b)
        for (long c = -5; c <= 5; ++c) CHECK(discriminant(IntPoly{c, b, 1}) == b * b - 4 * c);
    CHECK(discriminant_hom(HomPoly(2, {Integer(0), Integer(1), Integer(0)})) == 1);
}

TEST_CASE("resultant and gcd on random instances") {
    for (int i = 0; i < 100; ++i) {
        IntPoly f = random_poly(static_cast<int>(oracle::uniform(1, 4)), 9);
        IntPoly g = random_poly(static_cast<int>(oracle::uniform(1, 4)), 9);
        if (i % 2 == 0) {
            const IntPoly c = random_poly(static_cast<int>(oracle::uniform(1, 2)), 5);
            f = f * c;
            g = g * c;
        }
        const IntPoly h = gcd(f, g);
        CHECK(divides_q(h, f));
        CHECK(divides_q(h, g));
        CHECK((resultant(f, g) == 0) == (h.degree() > 0));
        if (i % 2 == 0) CHECK(h.degree() > 0);

        // Res(f g, k) = Res(f, k) Res(g, k)
        const IntPoly k = random_poly(static_cast<int>(oracle::uniform(1, 3)), 9);
        CHECK(resultant(f * g, k) == resultant(f, k) * resultant(g, k));
    }
}

TEST_CASE("factorization over Q") {
    const IntPoly a{10, -63, 102, 1};
    const FactorList fl = factor_q(a * IntPoly{-1, 1});
    REQUIRE(fl.factors.size() == 2);
    CHECK(fl.factors[0].first == IntPoly{-1, 1});
    CHECK(fl.factors[1].first == a);

    CHECK(factor_q(IntPoly{1, 0, 0, 0, 1}).factors.size() == 1);

    const FactorList six = factor_q(IntPoly{-6, 0, 6});
    CHECK(six.content == 6);
    REQUIRE(six.factors.size() == 2);
    CHECK(six.factors[0].first == IntPoly{-1, 1});
    CHECK(six.factors[1].first == IntPoly{1, 1});

    // Swinnerton-Dyer style: x^4 - 10x^2 + 1 is irreducible though it splits mod every prime
    CHECK(factor_q(IntPoly{1, 0, -10, 0, 1}).factors.size() == 1);
}

TEST_CASE("factorization round-trips on random products") {
    for (int i = 0; i < 30; ++i) {
        IntPoly f{1};
        for (int j = 0; j < 3; ++j) f = f * random_poly(static_cast<int>(oracle::uniform(1, 3)), 6);
        const FactorList fl = factor_q(f);
        IntPoly back = IntPoly::constant(fl.content);
        for (const auto& [g, e] : fl.factors) back = back * g.pow(e);
        CHECK(back == f);
        CHECK(deg_irr(f) <= 3);
    }
}

TEST_CASE("square-free decomposition and lcm") {
    const IntPoly f = IntPoly{-1, 1}.pow(3) * IntPoly{1, 0, 1};
    const auto dec = squarefree_decomposition(f);
    REQUIRE(dec.size() == 2);
    CHECK(dec[0].second == 1);
    CHECK(dec[1].second == 3);
    CHECK_FALSE(is_squarefree(f));

    const IntPoly t1{-1, 1}, t2{-2, 1}, t3{-3, 1};
    CHECK(lcm_sqfree(t1 * t2, t2 * t3) == t1 * t2 * t3);
    CHECK(lcm_sqfree(t1 * t2, t1 * t2) == t1 * t2);
    CHECK(lcm_sqfree(t1, t3) == t1 * t3);
}

TEST_CASE("places and forms") {
    CHECK(homogenize_place(IntPoly{-3, 1}) == parse_form("y - 3*x"));
    CHECK(homogenize_place(IntPoly{1, 0, 1}) == parse_form("y^2 + x^2"));
    CHECK(deg_place() == parse_form("x"));

    const HomPoly F = parse_form("x^3 + 2*y^3");
    CHECK(F.eval(Integer(1), Integer(1)) == 3);
    CHECK(F.at_y1() == IntPoly{2, 0, 0, 1});
    const HomFactorList fl = factor_hom(parse_form("x*y*(x+y)*(x^2+y^2)"));
    CHECK(fl.factors.size() == 4);
    CHECK(equal_up_to_unit(parse_form("2*x + 4*y"), parse_form("-x - 2*y")));
    CHECK(divides_hom(parse_form("x + y"), parse_form("x^2 - y^2")));
}

TEST_CASE("rational functions") {
    const RatFunc t = RatFunc::t();
    const RatFunc f = (t * t - RatFunc(1)) / (t - RatFunc(1));
    CHECK(f == t + RatFunc(1));
    CHECK(f.is_polynomial());
    CHECK(f.eval(Rational(2)).value() == 3);
    const RatFunc g = RatFunc(1) / t;
    CHECK_FALSE(g.eval(Rational(0)).has_value());
    CHECK(g.valuation(IntPoly{0, 1}).value() == -1);
    CHECK(g.valuation_infinity().value() == 1);
    CHECK(parse_ratfunc("t^-2*(t^-2 - 1728)") == (RatFunc(1) - RatFunc(1728) * t * t) / t.pow(4));
}

TEST_CASE("text format errors carry positions") {
    try {
        parse_ratfunc("1 + (t");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 1);
        CHECK(e.column() >= 6);
    }
    CHECK_THROWS_AS(parse_ratfunc("t**2"), ParseError);
    CHECK_THROWS_AS(parse_form("x^2 + y"), ParseError);
}

TEST_CASE("printing round-trips") {
    for (const char* s : {"1 - 1728*t", "8/3*t + 1 + t^2", "(t^4 + 1)/(t^2 - 3*t)"}) {
        const RatFunc f = parse_ratfunc(s);
        CHECK(parse_ratfunc(to_string(f)) == f);
    }
    const HomPoly F = parse_form("13*x^2 + 12*x*y + 3*y^2");
    CHECK(parse_form(to_string(F)) == F);
}

}  // TEST_SUITE
