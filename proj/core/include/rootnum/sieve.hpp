#pragma once

// Square-free values of polynomials: local root counts, the truncated Euler
// product for the density, exact censuses and the exceptional counts delta(N).

#include "rootnum/poly.hpp"

#include <cstdint>
#include <string>

namespace rootnum {

/// #{x mod m : P(x) = 0 mod m}, by enumeration.
std::uint64_t roots_mod(const IntPoly& P, std::uint64_t m);

/// #{(x, y) mod m : P(x, y) = 0 mod m}, by enumeration.
std::uint64_t roots_mod(const BiPoly& P, std::uint64_t m);

/// #{x mod p^2 : P(x) = 0 mod p^2} for prime p, by lifting the roots mod p.
std::uint64_t roots_mod_prime_square(const IntPoly& P, std::uint64_t p);

/// #{(x, y) mod p^2 : F(x, y) = 0 mod p^2} for a form F and prime p, by
/// splitting off the pairs with x or y a unit.
std::uint64_t roots_mod_prime_square(const HomPoly& F, std::uint64_t p);

/// prod_{p <= B} (1 - l(p^2)/p^2).
Rational density_main_term(const IntPoly& P, std::uint64_t B);

/// prod_{p <= B} (1 - l2(p^2)/p^4).
Rational density_main_term(const HomPoly& F, std::uint64_t B);

enum class CensusMode { Univariate, BivariateCoprime };
std::string to_string(CensusMode m);

struct CensusReport {
    CensusMode mode = CensusMode::Univariate;
    std::int64_t N = 0;
    std::uint64_t domain = 0;       // N, or (2N + 1)^2 in the bivariate case
    std::uint64_t enumerated = 0;   // arguments tested (coprime pairs only)
    std::uint64_t count = 0;        // square-free values
    std::uint64_t non_squarefree = 0;
    std::uint64_t incomplete = 0;   // values the factorizer could not finish
    std::uint64_t delta = 0;        // values divisible by p^2 for some p above the threshold
    std::uint64_t B = 1000;         // Euler product truncation
    Rational main_term;
    double truncation_bound = 0;    // deg P / (B log B)
    double residual = 0;            // count / domain - main term
};

/// Counts the square-free values P(x), 1 <= x <= N, or F(x, y) over coprime
/// pairs in [-N, N]^2, together with delta(N) (threshold sqrt(N), resp. N).
CensusReport census(const IntPoly& P, std::int64_t N, std::uint64_t B = 1000, unsigned jobs = 1,
                    const FactorBudget& budget = {});
CensusReport census(const HomPoly& F, std::int64_t N, std::uint64_t B = 1000, unsigned jobs = 1,
                    const FactorBudget& budget = {});

/// #{1 <= x <= N : p^2 | P(x) for some p > sqrt(N)}.
std::uint64_t delta_exceptional(const IntPoly& P, std::int64_t N, unsigned jobs = 1,
                                const FactorBudget& budget = {});

/// #{coprime (x, y) in [-N, N]^2 : p^2 | F(x, y) for some p > N}.
std::uint64_t delta_exceptional(const HomPoly& F, std::int64_t N, unsigned jobs = 1,
                                const FactorBudget& budget = {});

}  // namespace rootnum
