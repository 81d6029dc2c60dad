#include "rootnum/errors.hpp"
#include "rootnum/polytext.hpp"
#include "rootnum/surface.hpp"

#include <doctest.h>

using namespace rootnum;

namespace {

EllipticSurface S(const char* c4, const char* c6) { return {parse_ratfunc(c4), parse_ratfunc(c6)}; }

const PlaceRecord* find_place(const SurfaceAnalysis& a, const HomPoly& p) {
    for (const auto& r : a.places)
        if (equal_up_to_unit(r.place, p)) return &r;
    return nullptr;
}

}  // namespace

TEST_SUITE("surface") {

TEST_CASE("classification from exponents") {
    CHECK(classify_exponents(0, 0, 0) == ReductionClass::Good);
    CHECK(classify_exponents(0, 0, 5) == ReductionClass::Multiplicative);
    CHECK(classify_exponents(2, 3, 7) == ReductionClass::AddPotMult);
    CHECK(classify_exponents(1, 2, 3) == ReductionClass::AddPotGood);
    CHECK(classify_exponents(kInfinite, 1, 2) == ReductionClass::AddPotGood);
    CHECK(badness_of(2, 3, 6) == Badness::HalfBad);
    CHECK(badness_of(0, 0, 0) == Badness::NotBad);
    CHECK(badness_of(0, 0, 3) == Badness::QuiteBad);
}

TEST_CASE("invariants of the first (j, d) family") {
    const EllipticSurface s = S("1 - 1728*t", "(1 - 1728*t)^2");
    CHECK(j_invariant(s) == RatFunc(1) / RatFunc::t());
    const HomogenizedInvariants h = homogenize_invariants(s);
    CHECK(divides_hom(parse_form("y"), h.D));
    CHECK(equal_up_to_unit(analyze(s).M, parse_form("y")));
}

TEST_CASE("j = 0 and j = 1728") {
    CHECK(j_invariant(S("1", "0")) == RatFunc(1728));
    CHECK(j_invariant(S("0", "1 + t")) == RatFunc(0));
    const SurfaceAnalysis a = analyze(S("1", "0"));
    CHECK(a.B == HomPoly::constant(1));
    CHECK(a.M == HomPoly::constant(1));
    CHECK_THROWS_AS(validate(S("t^2", "t^3")), NotASurface);
}

TEST_CASE("the three (j, d) families all have M = y") {
    for (auto [c4, c6] : {std::pair{"1 - 1728*t", "(1 - 1728*t)^2"},
                          std::pair{"t^-2*(t^-2 - 1728)", "t^-2*(t^-2 - 1728)^2"},
                          std::pair{"(t+1)^2*(t^-4 - 3)*(t^-4 - 1731)", "(t+1)^3*(t^-4 - 3)*(t^-4 - 1731)^2"}}) {
        CAPTURE(c4);
        CHECK(equal_up_to_unit(analyze(S(c4, c6)).M, parse_form("y")));
    }
}

TEST_CASE("semisimple specimens") {
    CHECK(equal_up_to_unit(analyze(S("1 + 8/3*t + t^2", "1 + 25/6*t + 4*t^2 + t^3")).M,
                           parse_form("(12*x + 5*y)*(3*x + 8*y)*y")));
    CHECK(equal_up_to_unit(analyze(S("2 + 4*t + t^2", "1 + 9*t + 6*t^2 + t^3")).M,
                           parse_form("(7*x + 2*y)*(x^2 + 4*x*y + y^2)")));
}

TEST_CASE("the place at infinity of c4 = 4, c6 = 11 + t") {
    // Weighted degrees 0 and 1 force Q = x: C4 = 4x^4, C6 = x^5 (11x + y),
    // D = x^10 (64x^2 - (11x + y)^2) / 1728, so x is additive.
    const SurfaceAnalysis a = analyze(S("4", "11 + t"));
    const PlaceRecord* px = find_place(a, parse_form("x"));
    REQUIRE(px != nullptr);
    CHECK(px->e4 == 4);
    CHECK(px->e6 == 5);
    CHECK(px->eD == 10);
    CHECK(px->klass == ReductionClass::AddPotGood);
    CHECK(equal_up_to_unit(a.M, parse_form("(3*x + y)*(19*x + y)")));
}

TEST_CASE("constant j gives M = 1") {
    const SurfaceAnalysis a = analyze(S("-3452", "5958152"));
    CHECK(a.j_constant);
    CHECK(a.M == HomPoly::constant(1));
}

TEST_CASE("M divides B' divides B") {
    for (auto [c4, c6] : {std::pair{"1 + t", "-1 + 3*t"}, std::pair{"3", "2 + 7*t"},
                          std::pair{"(t+1)*(t+3)", "13 + 12*t + 3*t^2"}, std::pair{"1 - 1728*t", "(1 - 1728*t)^2"}}) {
        const SurfaceAnalysis a = analyze(S(c4, c6));
        CAPTURE(c4);
        CHECK(divides_hom(a.M, a.Bprime));
        CHECK(divides_hom(a.Bprime, a.B));
    }
}

TEST_CASE("multiplicity") {
    CHECK(multiplicity(parse_form("x"), parse_form("x^3*y")) == 3);
    CHECK(multiplicity(parse_form("x + y"), parse_form("x^3*y")) == 0);
}

}  // TEST_SUITE
