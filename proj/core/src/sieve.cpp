#include "rootnum/sieve.hpp"

#include "shard.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace rootnum {

namespace {

using u64 = std::uint64_t;
using i64 = std::int64_t;
using i128 = __int128;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 reduce(const Integer& c, u64 m) {
    Integer r;
    mpz_fdiv_r_ui(r.get_mpz_t(), c.get_mpz_t(), m);
    return r.get_ui();
}

// Coefficients reduced mod m, constant term first.
std::vector<u64> reduced(const IntPoly& P, u64 m) {
    std::vector<u64> out;
    for (const auto& c : P.coeffs()) out.push_back(reduce(c, m));
    return out;
}

u64 eval_mod(const std::vector<u64>& c, u64 x, u64 m) {
    u64 acc = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = (mulmod(acc, x, m) + *it) % m;
    return acc;
}

u64 roots_mod_p(const std::vector<u64>& c, u64 p) {
    u64 n = 0;
    for (u64 x = 0; x < p; ++x) n += eval_mod(c, x, p) == 0;
    return n;
}

// P(x) as a 128-bit value, or nothing on overflow.
std::optional<i128> eval128(const IntPoly& P, i64 x) {
    i128 acc = 0;
    for (int i = P.degree(); i >= 0; --i) {
        const Integer& c = P[static_cast<unsigned>(i)];
        if (!c.fits_slong_p()) return std::nullopt;
        if (__builtin_mul_overflow(acc, static_cast<i128>(x), &acc)) return std::nullopt;
        if (__builtin_add_overflow(acc, static_cast<i128>(c.get_si()), &acc)) return std::nullopt;
    }
    return acc;
}

std::optional<i128> eval128(const HomPoly& F, i64 x, i64 y) {
    // sum c_i x^i y^(n-i) by Horner in x/y
    const unsigned n = F.degree();
    i128 acc = 0, ypow = 1;
    for (unsigned i = n + 1; i-- > 0;) {
        const Integer& c = F.coeff(i);
        if (!c.fits_slong_p()) return std::nullopt;
        // acc = acc * x + c * y^(n-i)
        i128 term;
        if (__builtin_mul_overflow(acc, static_cast<i128>(x), &acc)) return std::nullopt;
        if (__builtin_mul_overflow(static_cast<i128>(c.get_si()), ypow, &term)) return std::nullopt;
        if (__builtin_add_overflow(acc, term, &acc)) return std::nullopt;
        if (i > 0 && __builtin_mul_overflow(ypow, static_cast<i128>(y), &ypow)) return std::nullopt;
    }
    return acc;
}

Integer to_integer(i128 v) {
    const bool neg = v < 0;
    u128 m = neg ? static_cast<u128>(-v) : static_cast<u128>(v);
    Integer r = static_cast<unsigned long>(m >> 64);
    r <<= 64;
    r += static_cast<unsigned long>(m & ~0ull);
    return neg ? Integer(-r) : r;
}

enum class ValueKind { SquareFree, Square, Incomplete };

struct ValueInfo {
    ValueKind kind = ValueKind::SquareFree;
    bool exceptional = false;  // some p^2 | v with p above the threshold
};

// Classifies v != 0 (or 0, which is divisible by every square).
ValueInfo classify_value(const std::optional<i128>& small, const Integer& big, const Integer& threshold_sq,
                         const FactorBudget& budget) {
    ValueInfo info;
    if (small && *small == 0) return {ValueKind::Square, true};
    if (!small && big == 0) return {ValueKind::Square, true};
    const i128 lim = static_cast<i128>(~0ull);
    if (small && *small <= lim && *small >= -lim) {
        const u64 v = static_cast<u64>(*small < 0 ? -*small : *small);
        for (const auto& [p, e] : factorize_u64(v)) {
            if (e < 2) continue;
            info.kind = ValueKind::Square;
            if (Integer(static_cast<unsigned long>(p)) * Integer(static_cast<unsigned long>(p)) > threshold_sq)
                info.exceptional = true;
        }
        return info;
    }
    const Integer value = abs(small ? to_integer(*small) : big);
    for (const FactorBudget& b : {budget, budget.scaled(8)}) {
        const Factorization f = factorize(value, b);
        if (!f.complete) continue;
        for (const auto& pp : f.factors) {
            if (pp.exponent < 2) continue;
            info.kind = ValueKind::Square;
            if (pp.prime * pp.prime > threshold_sq) info.exceptional = true;
        }
        return info;
    }
    return {ValueKind::Incomplete, false};
}

void tally(CensusReport& r, const ValueInfo& info) {
    ++r.enumerated;
    switch (info.kind) {
        case ValueKind::SquareFree: ++r.count; break;
        case ValueKind::Square: ++r.non_squarefree; break;
        case ValueKind::Incomplete: ++r.incomplete; break;
    }
    if (info.exceptional) ++r.delta;
}

void merge(CensusReport& a, const CensusReport& b) {
    a.enumerated += b.enumerated;
    a.count += b.count;
    a.non_squarefree += b.non_squarefree;
    a.incomplete += b.incomplete;
    a.delta += b.delta;
}

void finish(CensusReport& r, int degree, const Rational& main) {
    r.main_term = main;
    const double B = static_cast<double>(r.B);
    r.truncation_bound = degree / (B * std::log(B));
    r.residual = static_cast<double>(r.count) / static_cast<double>(r.domain) - to_double(main);
}

i64 gcd64(i64 a, i64 b) { return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b); }

CensusReport census_uni(const IntPoly& P, i64 N, u64 B, unsigned jobs, const FactorBudget& budget) {
    if (N < 1) throw std::invalid_argument("census: N must be positive");
    if (P.degree() < 0) throw std::invalid_argument("census: zero polynomial");
    const Integer threshold_sq(static_cast<long>(N));
    CensusReport r = detail::shard<CensusReport>(
        1, N, jobs,
        [&](i64 lo, i64 hi) {
            CensusReport part;
            for (i64 x = lo; x <= hi; ++x) {
                const auto v = eval128(P, x);
                const Integer big = v ? Integer(0) : P.eval(Integer(static_cast<long>(x)));
                tally(part, classify_value(v, big, threshold_sq, budget));
            }
            return part;
        },
        [](CensusReport& a, const CensusReport& b) { merge(a, b); });
    r.mode = CensusMode::Univariate;
    r.N = N;
    r.domain = static_cast<u64>(N);
    r.B = B;
    return r;
}

CensusReport census_bi(const HomPoly& F, i64 N, u64 B, unsigned jobs, const FactorBudget& budget) {
    if (N < 1) throw std::invalid_argument("census: N must be positive");
    if (F.is_zero()) throw std::invalid_argument("census: zero form");
    const Integer threshold_sq = Integer(static_cast<long>(N)) * N;
    CensusReport r = detail::shard<CensusReport>(
        -N, N, jobs,
        [&](i64 lo, i64 hi) {
            CensusReport part;
            for (i64 x = lo; x <= hi; ++x)
                for (i64 y = -N; y <= N; ++y) {
                    if (gcd64(x, y) != 1) continue;
                    const auto v = eval128(F, x, y);
                    const Integer big =
                        v ? Integer(0) : F.eval(Integer(static_cast<long>(x)), Integer(static_cast<long>(y)));
                    tally(part, classify_value(v, big, threshold_sq, budget));
                }
            return part;
        },
        [](CensusReport& a, const CensusReport& b) { merge(a, b); });
    r.mode = CensusMode::BivariateCoprime;
    r.N = N;
    const u64 side = static_cast<u64>(2 * N + 1);
    r.domain = side * side;
    r.B = B;
    return r;
}

}  // namespace

std::uint64_t roots_mod(const IntPoly& P, std::uint64_t m) {
    if (m == 0) throw std::invalid_argument("roots_mod: modulus must be positive");
    const auto c = reduced(P, m);
    u64 n = 0;
    for (u64 x = 0; x < m; ++x) n += eval_mod(c, x, m) == 0;
    return n;
}

std::uint64_t roots_mod(const BiPoly& P, std::uint64_t m) {
    if (m == 0) throw std::invalid_argument("roots_mod: modulus must be positive");
    std::vector<std::tuple<unsigned, unsigned, u64>> terms;
    for (const auto& [ij, c] : P.terms) terms.emplace_back(ij.first, ij.second, reduce(c, m));
    auto powmod = [m](u64 b, unsigned e) {
        u64 r = 1 % m;
        while (e--) r = mulmod(r, b, m);
        return r;
    };
    u64 n = 0;
    for (u64 x = 0; x < m; ++x)
        for (u64 y = 0; y < m; ++y) {
            u64 acc = 0;
            for (const auto& [i, j, c] : terms) acc = (acc + mulmod(c, mulmod(powmod(x, i), powmod(y, j), m), m)) % m;
            n += acc == 0;
        }
    return n;
}

std::uint64_t roots_mod_prime_square(const IntPoly& P, std::uint64_t p) {
    const u64 p2 = p * p;
    const auto c2 = reduced(P, p2);
    if (std::all_of(c2.begin(), c2.end(), [](u64 v) { return v == 0; })) return p2;
    const auto c1 = reduced(P, p);
    if (std::all_of(c1.begin(), c1.end(), [](u64 v) { return v == 0; })) {
        // P = p Q: p^2 | P(x) iff p | Q(x), and every root mod p lifts p ways
        std::vector<u64> q;
        for (u64 v : c2) q.push_back(v / p);
        return p * roots_mod_p(q, p);
    }
    const auto d1 = reduced(P.derivative(), p);
    u64 n = 0;
    for (u64 r = 0; r < p; ++r) {
        if (eval_mod(c1, r, p) != 0) continue;
        if (eval_mod(d1, r, p) != 0)
            n += 1;
        else if (eval_mod(c2, r, p2) == 0)
            n += p;
    }
    return n;
}

std::uint64_t roots_mod_prime_square(const HomPoly& F, std::uint64_t p) {
    const u64 p2 = p * p;
    const unsigned d = F.degree();
    if (d == 0) return reduce(F.coeff(0), p2) == 0 ? p2 * p2 : 0;
    // x = p x', y = p y': F = p^d F(x', y')
    u64 both;
    if (d >= 2) {
        both = p2;
    } else {
        const u64 a = reduce(F.coeff(1), p), b = reduce(F.coeff(0), p);
        both = 0;
        for (u64 u = 0; u < p; ++u)
            for (u64 v = 0; v < p; ++v) both += (mulmod(a, u, p) + mulmod(b, v, p)) % p == 0;
    }
    // x a unit: F(x, y) = x^d F(1, y/x)
    const u64 x_unit = (p2 - p) * roots_mod_prime_square(F.at_x1(), p);
    // x in pZ, y a unit: F(x, y) = y^d F(x/y, 1) with x/y in pZ
    const auto h = reduced(F.at_y1(), p2);
    u64 in_p = 0;
    for (u64 t = 0; t < p; ++t) in_p += eval_mod(h, t * p, p2) == 0;
    return both + x_unit + (p2 - p) * in_p;
}

Rational density_main_term(const IntPoly& P, std::uint64_t B) {
    if (B < 2) throw std::invalid_argument("density_main_term: B must be at least 2");
    Rational prod = 1;
    for (u64 p : primes_up_to(static_cast<std::uint32_t>(B))) {
        const u64 p2 = p * p;
        prod *= Rational(Integer(static_cast<unsigned long>(p2 - roots_mod_prime_square(P, p))),
                         Integer(static_cast<unsigned long>(p2)));
    }
    prod.canonicalize();
    return prod;
}

Rational density_main_term(const HomPoly& F, std::uint64_t B) {
    if (B < 2) throw std::invalid_argument("density_main_term: B must be at least 2");
    Rational prod = 1;
    for (u64 p : primes_up_to(static_cast<std::uint32_t>(B))) {
        const Integer p4 = Integer(static_cast<unsigned long>(p * p)) * static_cast<unsigned long>(p * p);
        prod *= Rational(p4 - Integer(static_cast<unsigned long>(roots_mod_prime_square(F, p))), p4);
    }
    prod.canonicalize();
    return prod;
}

std::string to_string(CensusMode m) { return m == CensusMode::Univariate ? "univariate" : "bivariate-coprime"; }

CensusReport census(const IntPoly& P, std::int64_t N, std::uint64_t B, unsigned jobs, const FactorBudget& budget) {
    CensusReport r = census_uni(P, N, B, jobs, budget);
    finish(r, P.degree(), density_main_term(P, B));
    return r;
}

CensusReport census(const HomPoly& F, std::int64_t N, std::uint64_t B, unsigned jobs, const FactorBudget& budget) {
    CensusReport r = census_bi(F, N, B, jobs, budget);
    finish(r, static_cast<int>(F.degree()), density_main_term(F, B));
    return r;
}

std::uint64_t delta_exceptional(const IntPoly& P, std::int64_t N, unsigned jobs, const FactorBudget& budget) {
    return census_uni(P, N, 2, jobs, budget).delta;
}

std::uint64_t delta_exceptional(const HomPoly& F, std::int64_t N, unsigned jobs, const FactorBudget& budget) {
    return census_bi(F, N, 2, jobs, budget).delta;
}

}  // namespace rootnum
