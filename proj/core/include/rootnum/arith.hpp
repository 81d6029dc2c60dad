#pragma once

// Arbitrary-precision integer helpers and the multiplicative functions
// (Liouville, Moebius, squarefull part, divisor counts) used everywhere else.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <utility>
#include <span>
#include <string>
#include <vector>

namespace rootnum {

using Integer = mpz_class;
using Rational = mpq_class;

/// Effort policy for integer factorization.
///
/// Small primes are divided out first, composite cofactors go to
/// Pollard-Brent rho, and cofactors rho cannot split are trial divided up to
/// `trial_bound`. Anything still composite after that is reported as an
/// unfactored cofactor. The rho stage draws from an RNG seeded by `seed`, so
/// results are reproducible and calls share no state.
struct FactorBudget {
    std::uint64_t trial_bound = 1'000'000;
    std::uint64_t rho_iterations = 1u << 20;
    unsigned rho_attempts = 12;
    std::uint64_t seed = 0x243F6A8885A308D3ull;

    /// A budget with every limit multiplied by `factor` (used for retries).
    FactorBudget scaled(unsigned factor) const;
};

struct PrimePower {
    Integer prime;
    unsigned exponent = 0;

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

struct Factorization {
    int sign = 1;
    std::vector<PrimePower> factors;  // primes strictly increasing
    bool complete = true;
    Integer cofactor = 1;  // unfactored composite part (1 when complete)

    /// sign * prod p^e * cofactor.
    Integer value() const;
};

/// Factor a nonzero integer. Never throws on hard inputs: incompleteness is
/// recorded in the result.
Factorization factorize(const Integer& n, const FactorBudget& budget = {});

/// Throws FactorizationIncomplete unless `f.complete`.
void require_complete(const Factorization& f, const Integer& n);

/// lambda(n) = (-1)^Omega(n); lambda(0) = 0.
int liouville(const Integer& n, const FactorBudget& budget = {});
int liouville(std::int64_t n, const FactorBudget& budget = {});

/// mu(n) for n != 0.
int moebius(const Integer& n, const FactorBudget& budget = {});
int moebius(std::int64_t n, const FactorBudget& budget = {});

/// prod_{p^2 | n} p^(v_p(n)-1); sq(0) = 0.
Integer sq_part(const Integer& n, const FactorBudget& budget = {});

/// Product of the distinct primes dividing n (n != 0).
Integer radical(const Integer& n, const FactorBudget& budget = {});

/// True when no p^2 divides n (n != 0).
bool is_squarefree(const Integer& n, const FactorBudget& budget = {});

/// Number of ordered k-tuples of positive integers with product |n|.
Integer tau_k(const Integer& n, unsigned k, const FactorBudget& budget = {});

/// Complete factorization of a positive 64-bit integer (primes increasing).
std::vector<std::pair<std::uint64_t, unsigned>> factorize_u64(std::uint64_t n);

/// lambda, mu and square-freeness on 64-bit magnitudes; these never give up.
int liouville_u64(std::uint64_t n);
int moebius_u64(std::uint64_t n);
bool is_squarefree_u64(std::uint64_t n);

/// Kronecker symbol (a/n), total on Z x Z.
int kronecker(const Integer& a, const Integer& n);

/// v_p(n) for n != 0.
unsigned valuation(const Integer& n, const Integer& p);

/// v_p(q) for q != 0 (may be negative).
int valuation(const Rational& q, const Integer& p);

bool is_probable_prime(const Integer& n);
bool is_prime_u64(std::uint64_t n);

/// Floor square root if n is a perfect square, nothing otherwise.
std::optional<Integer> exact_sqrt(const Integer& n);

/// All primes <= bound, by sieve of Eratosthenes.
std::vector<std::uint32_t> primes_up_to(std::uint32_t bound);

/// Shared table of primes below 10^6 (built on first use, immutable after).
std::span<const std::uint32_t> small_primes();

/// Liouville values lambda(1..n) by a linear sieve; index 0 holds 0.
std::vector<std::int8_t> liouville_table(std::uint32_t n);

/// Moebius values mu(1..n) by a linear sieve; index 0 holds 0.
std::vector<std::int8_t> moebius_table(std::uint32_t n);

/// Natural logarithm of |n| for n != 0, valid far beyond double range.
double log_abs(const Integer& n);

/// Decimal string of a rational as "p/q" or "p".
std::string to_string(const Rational& q);

/// Nearest double to a rational.
double to_double(const Rational& q);

}  // namespace rootnum
