#include "oracles.hpp"

#include "rootnum/descent.hpp"
#include "rootnum/errors.hpp"
#include "rootnum/polytext.hpp"

#include <doctest.h>

#include <algorithm>

using namespace rootnum;

namespace {

Integer I(std::int64_t v) { return Integer(static_cast<long>(v)); }

struct Sampled {
    IntPoly f;
    Integer d;
    std::vector<std::pair<Rational, Rational>> points;  // the first one is the base point
};

/// f = m (x - r1)(x - r2)(x - r3)(x - r4) + d q(x)^2 has the points (ri, q(ri)) on d y^2 = f(x).
std::optional<Sampled> sample_curve() {
    std::int64_t r[4];
    for (auto& v : r) v = oracle::uniform(-6, 6);
    const IntPoly q(std::vector<Integer>{I(oracle::uniform(-4, 4)), I(oracle::uniform(-4, 4)), I(oracle::uniform(-2, 2))});
    const std::int64_t m = oracle::uniform(1, 3) * (oracle::uniform(0, 1) ? 1 : -1);
    std::int64_t d = 0;
    do d = oracle::uniform(-15, 15);
    while (d == 0 || !oracle::squarefree(d));
    IntPoly f = IntPoly::constant(I(m));
    for (auto v : r) f = f * IntPoly(std::vector<Integer>{I(-v), I(1)});
    f = f + IntPoly::constant(I(d)) * q * q;
    if (f.degree() != 4 || discriminant(f) == 0) return std::nullopt;
    Sampled s{f, I(d), {}};
    for (auto v : r) {
        const Integer y = q.eval(I(v));
        if (s.points.empty() && y == 0) return std::nullopt;
        s.points.emplace_back(Rational(I(v)), Rational(y));
    }
    return s;
}

}  // namespace

TEST_SUITE("descent") {

TEST_CASE("norm form embeddings") {
    for (auto [a, b, c] : {std::array<long, 3>{1, 0, 1}, {2, 2, 3}, {1, 0, -2}, {3, 1, 5}}) {
        const QuadEmbedding e = quadform_embedding(Integer(a), Integer(b), Integer(c));
        CHECK(e.D == b * b - 4 * a * c);
        for (long x = -5; x <= 5; ++x)
            for (long y = -5; y <= 5; ++y) REQUIRE(e.norm(Integer(x), Integer(y)) == a * (a * x * x + b * x * y + c * y * y));
    }
    CHECK_THROWS_AS(quadform_embedding(Integer(1), Integer(3), Integer(2)), FormReducible);
    CHECK_THROWS_AS(quadform_embedding(Integer(0), Integer(1), Integer(1)), FormReducible);
    CHECK_THROWS_AS(quadform_embedding(Integer(2), Integer(4), Integer(6)), std::invalid_argument);
}

TEST_CASE("quartic x^4 + 1 with d = 2") {
    const IntPoly f{1, 0, 0, 0, 1};
    const QuarticMap phi = quartic_to_weierstrass(f, Integer(2), Rational(1), Rational(1));
    const WeierstrassTwist& E = phi.target();
    CHECK(phi(Rational(1), Rational(1)).infinity);
    for (const auto& [x, y] : {std::pair{-1, 1}, {1, -1}, {-1, -1}}) {
        const CurvePoint P = phi(Rational(x), Rational(y));
        CHECK(E.contains(P));
    }
    CHECK_THROWS_AS(quartic_to_weierstrass(f, Integer(2), Rational(1), Rational(2)), BasePointInvalid);
    CHECK_THROWS_AS(quartic_to_weierstrass(f, Integer(1), Rational(0), Rational(0)), BasePointInvalid);
    CHECK_THROWS_AS(phi(Rational(2), Rational(1)), std::invalid_argument);

    const WeierstrassTwist T = quartic_twist(f, Integer(2));
    CHECK(T.a2 == 0);
    CHECK(T.a4 == -4);
    CHECK(T.a6 == 0);
}

TEST_CASE("random quartics map their points onto the cubic") {
    int done = 0;
    while (done < 100) {
        const auto s = sample_curve();
        if (!s) continue;
        ++done;
        const auto& [r, y0] = s->points[0];
        const QuarticMap phi(s->f, s->d, r, y0);
        const WeierstrassTwist& E = phi.target();
        CHECK(phi(r, y0).infinity);
        for (std::size_t i = 1; i < s->points.size(); ++i) {
            const auto& [x, y] = s->points[i];
            REQUIRE(E.contains(phi(x, y)));
            REQUIRE(E.contains(phi(x, -y)));
        }
        REQUIRE(E.contains(phi(r, -y0)));
    }
}

TEST_CASE("group law") {
    const WeierstrassTwist E{Integer(1), Integer(0), Integer(0), Integer(-2)};  // y^2 = x^3 - 2
    E.validate();
    const CurvePoint P = CurvePoint::at(3, 5);
    REQUIRE(E.contains(P));
    const CurvePoint P2 = E.dbl(P), P3 = E.add(P2, P), P5 = E.mul(P, 5);
    CHECK(E.contains(P2));
    CHECK(E.contains(P5));
    CHECK(E.add(P3, P2) == P5);
    CHECK(E.add(P, E.add(P2, P3)) == E.add(E.add(P, P2), P3));
    CHECK(E.add(P, E.negate(P)).infinity);
    CHECK(E.mul(P, -2) == E.negate(P2));
    CHECK(E.mul(P, 0).infinity);

    // 6 y^2 = x^3 - 2 through (2, 1)
    const WeierstrassTwist T{Integer(6), Integer(0), Integer(0), Integer(-2)};
    const CurvePoint Q = CurvePoint::at(2, 1);
    REQUIRE(T.contains(Q));
    const CurvePoint R = T.mul(Q, 3);
    CHECK(T.contains(R));
    CHECK(T.add(T.add(Q, Q), T.add(Q, R)) == T.add(Q, T.add(Q, T.add(Q, R))));
    CHECK_THROWS_AS((WeierstrassTwist{Integer(4), 0, 0, -2}.validate()), std::invalid_argument);
    CHECK_THROWS_AS((WeierstrassTwist{Integer(1), 0, 0, 0}.validate()), std::invalid_argument);
}

TEST_CASE("canonical heights") {
    const WeierstrassTwist E{Integer(1), Integer(0), Integer(0), Integer(-2)};
    const CurvePoint P = CurvePoint::at(3, 5);
    const double h1 = canonical_height(E, P), h2 = canonical_height(E, E.dbl(P));
    CHECK(h1 > 0);
    CHECK(h2 / h1 == doctest::Approx(4).epsilon(0.05));
    CHECK(naive_height(CurvePoint::at(Rational(-7, 3), 0)) == doctest::Approx(std::log(7.0)));

    const WeierstrassTwist C{Integer(1), Integer(0), Integer(-1), Integer(0)};  // y^2 = x^3 - x
    CHECK(canonical_height(C, CurvePoint::at(0, 0)) == 0);
    CHECK(canonical_height(C, CurvePoint::at(1, 0)) == 0);
    CHECK(canonical_height(C, CurvePoint{}) == 0);
}

TEST_CASE("twist point search agrees with a direct loop") {
    const HomPoly F = parse_form("x^3 + 2*y^3");
    const std::int64_t N = 50;
    std::vector<TwistSolution> brute;
    for (std::int64_t x = -N; x <= N; ++x)
        for (std::int64_t z = -N; z <= N; ++z) {
            if (std::gcd(x, z) != 1) continue;
            const std::int64_t v = x * x * x + 2 * z * z * z;
            if (v < 0 || v % 3) continue;
            for (std::int64_t y = 0; y * y <= v / 3; ++y)
                if (3 * y * y == v) {
                    brute.push_back({I(x), I(y), I(z)});
                    if (y) brute.push_back({I(x), I(-y), I(z)});
                }
        }
    std::sort(brute.begin(), brute.end());
    const auto found = twist_point_search(F, Integer(3), N, 2);
    CHECK(found == brute);
    CHECK_FALSE(found.empty());

    CHECK(twist_point_search(parse_form("x^4 + y^4"), Integer(-1), 30).empty());
    CHECK_THROWS_AS(twist_point_search(parse_form("x^2 + y^2"), Integer(1), 5), std::invalid_argument);
}

TEST_CASE("packing bound") {
    CHECK(packing_count_bound(1, 1, 0) == 1);
    for (unsigned r = 0; r <= 6; ++r) {
        Integer p;
        mpz_ui_pow_ui(p.get_mpz_t(), 3, r);
        CHECK(packing_count_bound(2, 2, r) == p);
    }
    CHECK(packing_count_bound(1, 4, 2) == 25);
    CHECK(packing_count_bound(1, 2, 1) == 3);  // 1 + 2 sqrt 2 = 3.83
    CHECK_THROWS_AS(packing_count_bound(2, 1, 1), std::invalid_argument);
}

}  // TEST_SUITE
