#pragma once

// Small independent reference implementations used as test oracles. They are
// deliberately naive: trial division, brute-force enumeration, direct
// expansion.

#include <cstdint>
#include <cstdlib>
#include <map>
#include <numeric>
#include <random>
#include <vector>

namespace oracle {

inline std::map<std::int64_t, int> trial_factor(std::int64_t n) {
    std::map<std::int64_t, int> f;
    n = std::llabs(n);
    for (std::int64_t p = 2; p * p <= n; ++p)
        while (n % p == 0) {
            ++f[p];
            n /= p;
        }
    if (n > 1) ++f[n];
    return f;
}

inline int liouville(std::int64_t n) {
    if (n == 0) return 0;
    int omega = 0;
    for (const auto& [p, e] : trial_factor(n)) omega += e;
    return omega % 2 ? -1 : 1;
}

inline int moebius(std::int64_t n) {
    int s = 1;
    for (const auto& [p, e] : trial_factor(n)) {
        if (e > 1) return 0;
        s = -s;
    }
    return s;
}

inline bool squarefree(std::int64_t n) {
    if (n == 0) return false;
    for (const auto& [p, e] : trial_factor(n))
        if (e > 1) return false;
    return true;
}

inline std::int64_t powmod(std::int64_t b, std::int64_t e, std::int64_t m) {
    std::int64_t r = 1 % m;
    b = ((b % m) + m) % m;
    while (e > 0) {
        if (e & 1) r = static_cast<std::int64_t>(static_cast<__int128>(r) * b % m);
        b = static_cast<std::int64_t>(static_cast<__int128>(b) * b % m);
        e >>= 1;
    }
    return r;
}

/// Legendre symbol by Euler's criterion, p an odd prime.
inline int legendre(std::int64_t a, std::int64_t p) {
    const std::int64_t r = powmod(a, (p - 1) / 2, p);
    return r == 0 ? 0 : (r == 1 ? 1 : -1);
}

/// Class number by a second enumeration: for each b, the divisors a of
/// (b^2 - D)/4 with |b| <= a <= c.
inline std::int64_t class_number_by_divisors(std::int64_t D) {
    const std::int64_t n = -D;
    std::int64_t h = 0;
    for (std::int64_t b = 0; 3 * b * b <= n; ++b) {
        if ((b * b + n) % 4 != 0) continue;
        const std::int64_t ac = (b * b + n) / 4;
        for (std::int64_t a = std::max<std::int64_t>(b, 1); a * a <= ac; ++a) {
            if (ac % a != 0) continue;
            const std::int64_t c = ac / a;
            if (std::gcd(std::gcd(a, b), c) != 1) continue;
            // (a, b, c) and (a, -b, c) are both reduced unless b = 0, b = a or a = c
            h += (b == 0 || b == a || a == c) ? 1 : 2;
        }
    }
    return h;
}

inline std::mt19937_64& rng() {
    static std::mt19937_64 g(0x5eed1234u);
    return g;
}

inline std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng());
}

}  // namespace oracle
