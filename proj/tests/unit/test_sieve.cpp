#include "oracles.hpp"

#include "rootnum/polytext.hpp"
#include "rootnum/sieve.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace rootnum;

namespace {

std::int64_t eval(const IntPoly& P, std::int64_t x) { return P.eval(Integer(x)).get_si(); }

std::uint64_t brute_roots(const IntPoly& P, std::int64_t m) {
    std::uint64_t n = 0;
    for (std::int64_t x = 0; x < m; ++x) n += eval(P, x) % m == 0;
    return n;
}

bool has_large_square(std::int64_t v, std::int64_t threshold) {
    for (const auto& [p, e] : oracle::trial_factor(v))
        if (e >= 2 && p > threshold) return true;
    return false;
}

}  // namespace

TEST_SUITE("sieve") {

TEST_CASE("roots modulo m") {
    CHECK(roots_mod(IntPoly{0, 0, 1}, 4) == 2);
    for (std::uint64_t m : {1u, 2u, 9u, 30u, 97u}) CHECK(roots_mod(IntPoly{0, 1}, m) == 1);
    CHECK(roots_mod(IntPoly{1, 0, 1}, 5) == 2);
    CHECK(roots_mod(IntPoly{1, 0, 1}, 7) == 0);
    CHECK(roots_mod(parse_bipoly("x*y"), 2) == 3);
}

TEST_CASE("lifting to p^2 agrees with enumeration") {
    const IntPoly polys[] = {IntPoly{2, 0, 0, 1}, IntPoly{1, 0, 1}, IntPoly{0, 0, 1}, IntPoly{-1, 1, 0, 0, 1},
                             IntPoly{6, 11, 6, 1}, IntPoly{0, 1}};
    for (const IntPoly& P : polys)
        for (std::uint64_t p : {2u, 3u, 5u, 7u, 11u, 13u, 31u}) {
            CAPTURE(p);
            REQUIRE(roots_mod_prime_square(P, p) == brute_roots(P, static_cast<std::int64_t>(p * p)));
        }
    for (const char* f : {"x*y*(x+y)", "x^3 + 2*y^3", "x^2 + y^2", "x^4 - 2*x*y^3"}) {
        const HomPoly F = parse_form(f);
        for (std::uint64_t p : {2u, 3u, 5u, 7u}) {
            CAPTURE(f);
            CAPTURE(p);
            REQUIRE(roots_mod_prime_square(F, p) == roots_mod(parse_bipoly(f), p * p));
        }
    }
}

TEST_CASE("density main terms") {
    CHECK(density_main_term(IntPoly{0, 1}, 3) == Rational(2, 3));
    CHECK_THROWS_AS(density_main_term(IntPoly{0, 1}, 1), std::invalid_argument);

    // an independently assembled product for x^3 + 2
    const IntPoly P{2, 0, 0, 1};
    Rational expect = 1;
    for (std::int64_t p = 2; p <= 60; ++p) {
        if (oracle::trial_factor(p).begin()->first != p) continue;
        Rational f(p * p - static_cast<std::int64_t>(brute_roots(P, p * p)), p * p);
        f.canonicalize();
        expect *= f;
    }
    CHECK(density_main_term(P, 60) == expect);
}

TEST_CASE("square-free integers have density 6 / pi^2") {
    const CensusReport r = census(IntPoly{0, 1}, 10000);
    CHECK(r.count == 6083);
    CHECK(std::abs(static_cast<double>(r.count) / 10000 - 6 / (std::numbers::pi * std::numbers::pi)) < 0.01);
    CHECK(r.delta == 0);
    CHECK(std::abs(r.residual) < 0.01);
}

TEST_CASE("census counts agree with trial division") {
    const IntPoly P{2, 0, 0, 1};
    const std::int64_t N = 3000;
    const CensusReport r = census(P, N, 200, 2);
    std::uint64_t sf = 0;
    for (std::int64_t x = 1; x <= N; ++x) sf += oracle::squarefree(eval(P, x));
    CHECK(r.count == sf);
    CHECK(r.count + r.non_squarefree + r.incomplete == r.enumerated);
    CHECK(std::abs(r.residual) < 0.02);

    const HomPoly F = parse_form("x*y*(x+y)");
    const CensusReport b = census(F, 30, 100);
    std::uint64_t bsf = 0, pairs = 0;
    for (std::int64_t x = -30; x <= 30; ++x)
        for (std::int64_t y = -30; y <= 30; ++y) {
            if (std::gcd(x, y) != 1) continue;
            ++pairs;
            const std::int64_t v = x * y * (x + y);
            bsf += v != 0 && oracle::squarefree(v);
        }
    CHECK(b.enumerated == pairs);
    CHECK(b.count == bsf);
}

TEST_CASE("exceptional counts") {
    for (const IntPoly& P : {IntPoly{1, 0, 1}, IntPoly{2, 0, 0, 1}, IntPoly{-7, 0, 1}}) {
        const std::int64_t N = 2000;
        const auto root = static_cast<std::int64_t>(std::sqrt(static_cast<double>(N)));
        std::uint64_t brute = 0;
        for (std::int64_t x = 1; x <= N; ++x) brute += has_large_square(eval(P, x), root);
        CHECK(delta_exceptional(P, N) == brute);
    }
    const HomPoly F = parse_form("x^3 + 2*y^3");
    const std::int64_t N = 25;
    std::uint64_t brute = 0;
    for (std::int64_t x = -N; x <= N; ++x)
        for (std::int64_t y = -N; y <= N; ++y)
            if (std::gcd(x, y) == 1) brute += has_large_square(x * x * x + 2 * y * y * y, N);
    CHECK(delta_exceptional(F, N) == brute);
}

}  // TEST_SUITE
