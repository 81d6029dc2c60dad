#include "oracles.hpp"

#include "rootnum/arith.hpp"
#include "rootnum/errors.hpp"

#include <doctest.h>

using namespace rootnum;

TEST_SUITE("arith") {

TEST_CASE("liouville and moebius on small values") {
    CHECK(liouville(0) == 0);
    CHECK(liouville(1) == 1);
    CHECK(liouville(12) == -1);
    CHECK(moebius(4) == 0);
    CHECK(moebius(6) == 1);
    CHECK(moebius(30) == -1);
    CHECK(liouville(-12) == -1);
}

TEST_CASE("liouville and moebius agree with trial division") {
    for (std::int64_t n = 1; n <= 20000; ++n) {
        REQUIRE(liouville(n) == oracle::liouville(n));
        REQUIRE(moebius(n) == oracle::moebius(n));
        REQUIRE(is_squarefree_u64(static_cast<std::uint64_t>(n)) == oracle::squarefree(n));
    }
    for (int i = 0; i < 500; ++i) {
        const std::int64_t n = oracle::uniform(1, 1'000'000'000'000LL);
        REQUIRE(liouville_u64(static_cast<std::uint64_t>(n)) == oracle::liouville(n));
        REQUIRE(moebius(Integer(std::to_string(n))) == oracle::moebius(n));
    }
}

TEST_CASE("sieved tables match the pointwise functions") {
    const auto lam = liouville_table(5000);
    const auto mu = moebius_table(5000);
    CHECK(lam[0] == 0);
    for (std::uint32_t n = 1; n <= 5000; ++n) {
        REQUIRE(lam[n] == oracle::liouville(n));
        REQUIRE(mu[n] == oracle::moebius(n));
    }
}

TEST_CASE("sum over d | n of |mu(d)| lambda(n/d) is the indicator of n = 1") {
    const auto lam = liouville_table(10000);
    const auto mu = moebius_table(10000);
    for (std::uint32_t n = 1; n <= 10000; ++n) {
        int s = 0;
        for (std::uint32_t d = 1; d * d <= n; ++d) {
            if (n % d) continue;
            s += std::abs(mu[d]) * lam[n / d];
            if (d * d != n) s += std::abs(mu[n / d]) * lam[d];
        }
        REQUIRE(s == (n == 1 ? 1 : 0));
    }
}

TEST_CASE("sq_part, radical and tau_k") {
    CHECK(sq_part(Integer(72)) == 12);
    CHECK(sq_part(Integer(30)) == 1);
    CHECK(sq_part(Integer(0)) == 0);
    CHECK(radical(Integer(72)) == 6);
    CHECK(tau_k(Integer(12), 2) == 6);
    CHECK(tau_k(Integer(101), 5) == 5);
    CHECK(tau_k(Integer(360), 1) == 1);
    // tau_3(p^2) = 6
    CHECK(tau_k(Integer(49), 3) == 6);
}

TEST_CASE("factorize") {
    Factorization f = factorize(Integer(10403));
    REQUIRE(f.complete);
    REQUIRE(f.factors.size() == 2);
    CHECK(f.factors[0] == PrimePower{101, 1});
    CHECK(f.factors[1] == PrimePower{103, 1});

    f = factorize(Integer(-8));
    CHECK(f.sign == -1);
    REQUIRE(f.factors.size() == 1);
    CHECK(f.factors[0] == PrimePower{2, 3});

    f = factorize(Integer(1000003));
    REQUIRE(f.factors.size() == 1);
    CHECK(f.factors[0].exponent == 1);

    // products of random primes of assorted sizes round-trip
    for (int i = 0; i < 40; ++i) {
        Integer n = 1;
        for (int j = 0; j < 4; ++j) {
            Integer p;
            mpz_nextprime(p.get_mpz_t(), Integer(std::to_string(oracle::uniform(2, 1'000'000'000'000LL))).get_mpz_t());
            n *= p;
        }
        const Factorization g = factorize(n);
        REQUIRE(g.complete);
        CHECK(g.value() == n);
        for (std::size_t k = 1; k < g.factors.size(); ++k) CHECK(g.factors[k - 1].prime < g.factors[k].prime);
    }
}

TEST_CASE("perfect powers of large primes factor quickly") {
    Integer p("1000000000000000003");
    const Integer n = p * p * p * p * p * p * p;
    const Factorization f = factorize(n);
    REQUIRE(f.complete);
    REQUIRE(f.factors.size() == 1);
    CHECK(f.factors[0].exponent == 7);
}

TEST_CASE("an exhausted budget reports the cofactor") {
    FactorBudget tiny;
    tiny.trial_bound = 10;
    tiny.rho_iterations = 1;
    tiny.rho_attempts = 1;
    const Integer p("1000000000000000003"), q("1000000000000000009");
    const Factorization f = factorize(p * q, tiny);
    if (!f.complete) {
        CHECK(f.value() == p * q);
        CHECK_THROWS_AS(require_complete(f, p * q), FactorizationIncomplete);
    }
}

TEST_CASE("kronecker symbol") {
    for (std::int64_t p : {3, 5, 7, 11, 13, 101, 1009}) {
        CHECK(kronecker(Integer(-1), Integer(p)) == (p % 4 == 1 ? 1 : -1));
        for (std::int64_t a = -30; a <= 30; ++a) REQUIRE(kronecker(Integer(a), Integer(p)) == oracle::legendre(a, p));
    }
    CHECK(kronecker(Integer(2), Integer(7)) == 1);
    CHECK(kronecker(Integer(5), Integer(1)) == 1);
    CHECK(kronecker(Integer(5), Integer(2)) == -1);
    CHECK(kronecker(Integer(7), Integer(2)) == 1);
}

TEST_CASE("valuations and square roots") {
    CHECK(valuation(Integer(48), Integer(2)) == 4);
    CHECK(valuation(Rational(3, 32), Integer(2)) == -5);
    CHECK(valuation(Rational(9, 2), Integer(3)) == 2);
    CHECK(exact_sqrt(Integer(144)).value() == 12);
    CHECK_FALSE(exact_sqrt(Integer(145)).has_value());
    CHECK_FALSE(exact_sqrt(Integer(-4)).has_value());
}

TEST_CASE("primes") {
    const auto ps = primes_up_to(100);
    CHECK(ps.size() == 25);
    CHECK(ps.back() == 97);
    CHECK(is_prime_u64(1'000'000'007ULL));
    CHECK_FALSE(is_prime_u64(1'000'000'007ULL * 3));
    CHECK(small_primes().front() == 2);
}

TEST_CASE("log_abs beyond double range") {
    Integer big = 1;
    mpz_ui_pow_ui(big.get_mpz_t(), 10, 500);
    CHECK(log_abs(big) == doctest::Approx(500 * std::log(10.0)));
    CHECK(to_string(Rational(-3, 2)) == "-3/2");
}

}  // TEST_SUITE
