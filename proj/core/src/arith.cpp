#include "rootnum/arith.hpp"

#include "rootnum/errors.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <random>

namespace rootnum {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

constexpr u64 kSmallTrial = 1024;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 powmod(u64 b, u64 e, u64 m) {
    u64 r = 1 % m;
    b %= m;
    while (e) {
        if (e & 1) r = mulmod(r, b, m);
        b = mulmod(b, b, m);
        e >>= 1;
    }
    return r;
}

bool fits_u64(const Integer& n) { return mpz_sgn(n.get_mpz_t()) >= 0 && mpz_sizeinbase(n.get_mpz_t(), 2) <= 64; }

u64 to_u64(const Integer& n) {
    // mpz_get_ui is only 64 bits on LP64, which is what we build for.
    static_assert(sizeof(unsigned long) == 8);
    return mpz_get_ui(n.get_mpz_t());
}

Integer from_u64(u64 v) {
    Integer r;
    mpz_set_ui(r.get_mpz_t(), static_cast<unsigned long>(v));
    return r;
}

// Pollard-Brent on 64-bit moduli. Returns a nontrivial factor or 0.
u64 brent_u64(u64 n, u64 c, u64 y, u64 max_iter) {
    auto f = [&](u64 v) { return (mulmod(v, v, n) + c) % n; };
    const u64 m = 64;
    u64 g = 1, r = 1, q = 1, x = 0, ys = 0, iter = 0;
    do {
        x = y;
        for (u64 i = 0; i < r; ++i) y = f(y);
        u64 k = 0;
        do {
            ys = y;
            const u64 lim = std::min(m, r - k);
            for (u64 i = 0; i < lim; ++i) {
                y = f(y);
                q = mulmod(q, x > y ? x - y : y - x, n);
            }
            g = std::gcd(q, n);
            k += m;
            iter += lim;
        } while (k < r && g == 1);
        r <<= 1;
        if (iter > max_iter) return 0;
    } while (g == 1);
    if (g == n) {
        do {
            ys = f(ys);
            g = std::gcd(x > ys ? x - ys : ys - x, n);
        } while (g == 1);
    }
    return g == n ? 0 : g;
}

Integer brent_mpz(const Integer& n, const Integer& c, Integer y, u64 max_iter) {
    auto f = [&](Integer& v) {
        v = v * v + c;
        mpz_mod(v.get_mpz_t(), v.get_mpz_t(), n.get_mpz_t());
    };
    const u64 m = 64;
    Integer g = 1, q = 1, x, ys, diff;
    u64 r = 1, iter = 0;
    do {
        x = y;
        for (u64 i = 0; i < r; ++i) f(y);
        u64 k = 0;
        do {
            ys = y;
            const u64 lim = std::min(m, r - k);
            for (u64 i = 0; i < lim; ++i) {
                f(y);
                diff = x - y;
                q = q * abs(diff);
                mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
            }
            mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
            k += m;
            iter += lim;
        } while (k < r && g == 1);
        r <<= 1;
        if (iter > max_iter) return 0;
    } while (g == 1);
    if (g == n) {
        do {
            f(ys);
            diff = abs(x - ys);
            mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
        } while (g == 1);
    }
    return g == n ? Integer(0) : g;
}

// Accumulates prime powers; keyed by prime so splits can arrive in any order.
using PrimeMap = std::map<Integer, unsigned>;

struct Splitter {
    const FactorBudget& budget;
    std::mt19937_64 rng;
    PrimeMap primes;
    std::vector<Integer> stuck;

    explicit Splitter(const FactorBudget& b) : budget(b), rng(b.seed) {}

    void add_prime(const Integer& p, unsigned e) { primes[p] += e; }

    // Trial division of a cofactor by the primes in (from, budget.trial_bound].
    Integer trial_tail(Integer n, u64 from) {
        const auto ps = small_primes();
        for (auto p : ps) {
            if (p <= from) continue;
            if (p > budget.trial_bound) break;
            if (Integer(p) * p > n) break;
            unsigned e = 0;
            while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
                mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
                ++e;
            }
            if (e) add_prime(Integer(p), e);
        }
        return n;
    }

    std::optional<Integer> find_factor(const Integer& n) {
        // rho is hopeless on p^k with p large, so take roots first
        const std::size_t bits = mpz_sizeinbase(n.get_mpz_t(), 2);
        for (unsigned long k = 2; k <= bits; ++k) {
            Integer r;
            if (mpz_root(r.get_mpz_t(), n.get_mpz_t(), k) != 0) return r;
            if (r < 2) break;
        }
        for (unsigned attempt = 0; attempt < budget.rho_attempts; ++attempt) {
            if (fits_u64(n)) {
                const u64 nn = to_u64(n);
                const u64 c = 1 + rng() % (nn - 1);
                const u64 y = rng() % nn;
                if (u64 g = brent_u64(nn, c, y, budget.rho_iterations)) return from_u64(g);
            } else {
                Integer c = from_u64(1 + rng() % 1'000'003);
                Integer y = from_u64(rng());
                Integer g = brent_mpz(n, c, y, budget.rho_iterations);
                if (g != 0) return g;
            }
        }
        return std::nullopt;
    }

    void split(const Integer& n, unsigned mult) {
        if (n == 1) return;
        if (is_probable_prime(n)) {
            add_prime(n, mult);
            return;
        }
        if (auto g = find_factor(n)) {
            Integer other = n / *g;
            if (*g == other) {
                split(*g, 2 * mult);
            } else {
                split(*g, mult);
                split(other, mult);
            }
            return;
        }
        // rho gave up: fall back to the rest of the trial-division range
        Integer rest = trial_tail(n, kSmallTrial);
        if (rest == n) {
            for (unsigned i = 0; i < mult; ++i) stuck.push_back(n);
            return;
        }
        split(rest, mult);
        if (mult > 1) {
            // the primes found by trial_tail were counted once; scale them
            // (rare path, only taken for repeated composite cofactors)
            Integer divided = n / rest;
            for (auto& [p, e] : primes) {
                if (mpz_divisible_p(divided.get_mpz_t(), p.get_mpz_t())) {
                    unsigned v = valuation(divided, p);
                    e += v * (mult - 1);
                }
            }
        }
    }
};

void split_u64(u64 n, std::vector<u64>& out, u64& seed) {
    if (n == 1) return;
    if (is_prime_u64(n)) {
        out.push_back(n);
        return;
    }
    for (;;) {
        // splitmix64 keeps the retry sequence deterministic
        seed += 0x9E3779B97F4A7C15ull;
        u64 z = seed;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        z ^= z >> 31;
        const u64 c = 1 + z % (n - 1);
        if (u64 g = brent_u64(n, c, z % n, ~0ull)) {
            split_u64(g, out, seed);
            split_u64(n / g, out, seed);
            return;
        }
    }
}

}  // namespace

std::vector<std::pair<std::uint64_t, unsigned>> factorize_u64(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("factorize_u64: n must be nonzero");
    std::vector<std::pair<u64, unsigned>> out;
    for (u64 p : small_primes()) {
        if (p > 1000 || p * p > n) break;
        unsigned e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e) out.emplace_back(p, e);
    }
    if (n > 1) {
        std::vector<u64> rest;
        u64 seed = n;
        split_u64(n, rest, seed);
        std::sort(rest.begin(), rest.end());
        for (u64 p : rest) {
            if (!out.empty() && out.back().first == p)
                ++out.back().second;
            else
                out.emplace_back(p, 1);
        }
    }
    return out;
}

int liouville_u64(std::uint64_t n) {
    if (n == 0) return 0;
    unsigned omega = 0;
    for (const auto& [p, e] : factorize_u64(n)) omega += e;
    return (omega & 1) ? -1 : 1;
}

int moebius_u64(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("moebius_u64: n must be nonzero");
    int r = 1;
    for (const auto& [p, e] : factorize_u64(n)) {
        if (e > 1) return 0;
        r = -r;
    }
    return r;
}

bool is_squarefree_u64(std::uint64_t n) {
    if (n == 0) return false;
    for (const auto& [p, e] : factorize_u64(n))
        if (e > 1) return false;
    return true;
}

FactorBudget FactorBudget::scaled(unsigned factor) const {
    FactorBudget b = *this;
    b.trial_bound *= factor;
    b.rho_iterations *= factor;
    b.rho_attempts *= factor;
    return b;
}

Integer Factorization::value() const {
    Integer v = sign;
    for (const auto& pp : factors) {
        Integer t;
        mpz_pow_ui(t.get_mpz_t(), pp.prime.get_mpz_t(), pp.exponent);
        v *= t;
    }
    return v * cofactor;
}

bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

bool is_probable_prime(const Integer& n) {
    if (n < 2) return false;
    if (fits_u64(n)) return is_prime_u64(to_u64(n));
    return mpz_probab_prime_p(n.get_mpz_t(), 30) != 0;
}

std::optional<Integer> exact_sqrt(const Integer& n) {
    if (n < 0) return std::nullopt;
    if (!mpz_perfect_square_p(n.get_mpz_t())) return std::nullopt;
    Integer r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

std::vector<std::uint32_t> primes_up_to(std::uint32_t bound) {
    std::vector<std::uint32_t> out;
    if (bound < 2) return out;
    std::vector<bool> composite(bound + 1, false);
    for (std::uint64_t i = 2; i <= bound; ++i) {
        if (composite[i]) continue;
        out.push_back(static_cast<std::uint32_t>(i));
        for (std::uint64_t j = i * i; j <= bound; j += i) composite[j] = true;
    }
    return out;
}

std::span<const std::uint32_t> small_primes() {
    static const std::vector<std::uint32_t> table = primes_up_to(1'000'000);
    return table;
}

Factorization factorize(const Integer& n, const FactorBudget& budget) {
    if (n == 0) throw std::invalid_argument("factorize: n must be nonzero");
    Factorization out;
    out.sign = n < 0 ? -1 : 1;
    Integer m = abs(n);

    Splitter s(budget);
    const u64 small_bound = std::min<u64>(kSmallTrial, budget.trial_bound);
    for (auto p : small_primes()) {
        if (p > small_bound) break;
        if (Integer(p) * p > m) break;
        unsigned e = 0;
        while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
            mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
            ++e;
        }
        if (e) s.add_prime(Integer(p), e);
    }
    s.split(m, 1);

    for (const auto& [p, e] : s.primes) out.factors.push_back({p, e});
    if (!s.stuck.empty()) {
        out.complete = false;
        for (const auto& c : s.stuck) out.cofactor *= c;
    }
    return out;
}

void require_complete(const Factorization& f, const Integer& n) {
    if (!f.complete) {
        throw FactorizationIncomplete("could not factor " + n.get_str() + " (cofactor " +
                                      f.cofactor.get_str() + ")");
    }
}

int liouville(const Integer& n, const FactorBudget& budget) {
    if (n == 0) return 0;
    const auto f = factorize(n, budget);
    require_complete(f, n);
    unsigned omega_big = 0;
    for (const auto& pp : f.factors) omega_big += pp.exponent;
    return (omega_big & 1) ? -1 : 1;
}

int liouville(std::int64_t n, const FactorBudget&) {
    const u64 m = n < 0 ? static_cast<u64>(-(n + 1)) + 1 : static_cast<u64>(n);
    return liouville_u64(m);
}

int moebius(const Integer& n, const FactorBudget& budget) {
    if (n == 0) throw std::invalid_argument("moebius: n must be nonzero");
    const auto f = factorize(n, budget);
    require_complete(f, n);
    int r = 1;
    for (const auto& pp : f.factors) {
        if (pp.exponent > 1) return 0;
        r = -r;
    }
    return r;
}

int moebius(std::int64_t n, const FactorBudget&) {
    const u64 m = n < 0 ? static_cast<u64>(-(n + 1)) + 1 : static_cast<u64>(n);
    return moebius_u64(m);
}

Integer sq_part(const Integer& n, const FactorBudget& budget) {
    if (n == 0) return 0;
    const auto f = factorize(n, budget);
    require_complete(f, n);
    Integer r = 1;
    for (const auto& pp : f.factors) {
        if (pp.exponent < 2) continue;
        Integer t;
        mpz_pow_ui(t.get_mpz_t(), pp.prime.get_mpz_t(), pp.exponent - 1);
        r *= t;
    }
    return r;
}

Integer radical(const Integer& n, const FactorBudget& budget) {
    if (n == 0) throw std::invalid_argument("radical: n must be nonzero");
    const auto f = factorize(n, budget);
    require_complete(f, n);
    Integer r = 1;
    for (const auto& pp : f.factors) r *= pp.prime;
    return r;
}

bool is_squarefree(const Integer& n, const FactorBudget& budget) {
    if (n == 0) return false;
    const auto f = factorize(n, budget);
    require_complete(f, n);
    return std::all_of(f.factors.begin(), f.factors.end(),
                       [](const PrimePower& pp) { return pp.exponent == 1; });
}

Integer tau_k(const Integer& n, unsigned k, const FactorBudget& budget) {
    if (n == 0) throw std::invalid_argument("tau_k: n must be nonzero");
    if (k == 0) throw std::invalid_argument("tau_k: k must be positive");
    if (k == 1) return 1;
    const auto f = factorize(n, budget);
    require_complete(f, n);
    Integer r = 1;
    for (const auto& pp : f.factors) {
        Integer c;
        mpz_bin_uiui(c.get_mpz_t(), pp.exponent + k - 1, k - 1);
        r *= c;
    }
    return r;
}

int kronecker(const Integer& a, const Integer& n) {
    return mpz_kronecker(a.get_mpz_t(), n.get_mpz_t());
}

unsigned valuation(const Integer& n, const Integer& p) {
    if (n == 0) throw std::invalid_argument("valuation: n must be nonzero");
    Integer m = n;
    unsigned v = 0;
    while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
        mpz_divexact(m.get_mpz_t(), m.get_mpz_t(), p.get_mpz_t());
        ++v;
    }
    return v;
}

int valuation(const Rational& q, const Integer& p) {
    if (q == 0) throw std::invalid_argument("valuation: q must be nonzero");
    return static_cast<int>(valuation(q.get_num(), p)) - static_cast<int>(valuation(q.get_den(), p));
}

std::vector<std::int8_t> liouville_table(std::uint32_t n) {
    std::vector<std::int8_t> lam(static_cast<std::size_t>(n) + 1, 0);
    if (n == 0) return lam;
    std::vector<std::uint32_t> primes;
    lam[1] = 1;
    std::vector<bool> composite(static_cast<std::size_t>(n) + 1, false);
    for (std::uint32_t i = 2; i <= n; ++i) {
        if (!composite[i]) {
            primes.push_back(i);
            lam[i] = -1;
        }
        for (auto p : primes) {
            const std::uint64_t ip = static_cast<std::uint64_t>(i) * p;
            if (ip > n) break;
            composite[ip] = true;
            lam[ip] = static_cast<std::int8_t>(-lam[i]);
            if (i % p == 0) break;
        }
    }
    return lam;
}

std::vector<std::int8_t> moebius_table(std::uint32_t n) {
    std::vector<std::int8_t> mu(static_cast<std::size_t>(n) + 1, 0);
    if (n == 0) return mu;
    std::vector<std::uint32_t> primes;
    mu[1] = 1;
    std::vector<bool> composite(static_cast<std::size_t>(n) + 1, false);
    for (std::uint32_t i = 2; i <= n; ++i) {
        if (!composite[i]) {
            primes.push_back(i);
            mu[i] = -1;
        }
        for (auto p : primes) {
            const std::uint64_t ip = static_cast<std::uint64_t>(i) * p;
            if (ip > n) break;
            composite[ip] = true;
            if (i % p == 0) {
                mu[ip] = 0;
                break;
            }
            mu[ip] = static_cast<std::int8_t>(-mu[i]);
        }
    }
    return mu;
}

double log_abs(const Integer& n) {
    if (n == 0) throw std::invalid_argument("log_abs: n must be nonzero");
    long exp = 0;
    const double mant = mpz_get_d_2exp(&exp, n.get_mpz_t());
    return std::log(std::fabs(mant)) + static_cast<double>(exp) * std::log(2.0);
}

std::string to_string(const Rational& q) { return q.get_str(); }

double to_double(const Rational& q) { return q.get_d(); }

}  // namespace rootnum
