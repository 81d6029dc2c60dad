#include "rootnum/modform.hpp"

#include "rootnum/errors.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace rootnum {

std::int64_t class_number(std::int64_t D) {
    if (D >= 0 || ((D % 4) + 4) % 4 > 1)
        throw BadDiscriminant("discriminant must be negative and 0 or 1 mod 4, got " + std::to_string(D));
    const std::int64_t n = -D;
    std::int64_t h = 0;
    // reduced: |b| <= a <= c, b >= 0 if |b| = a or a = c; then 3a^2 <= n
    for (std::int64_t a = 1; 3 * a * a <= n; ++a) {
        for (std::int64_t b = -a + 1; b <= a; ++b) {
            if (((b - D) & 1) != 0) continue;
            const std::int64_t num = b * b + n;
            if (num % (4 * a) != 0) continue;
            const std::int64_t c = num / (4 * a);
            if (c < a) continue;
            if (c == a && b < 0) continue;
            if (std::gcd(std::gcd(a, b < 0 ? -b : b), c) != 1) continue;
            ++h;
        }
    }
    return h;
}

Rational epsilon(std::int64_t N) {
    if (N < 1) throw std::invalid_argument("epsilon: N must be positive");
    switch (N % 8) {
        case 7: return Rational(2);
        case 3: return Rational(4, 3);
        default: return Rational(1);
    }
}

namespace {

void check_weight(std::int64_t N, int k) {
    if (N < 1) throw std::invalid_argument("level must be positive");
    if (k < 2 || k % 2 != 0) throw std::invalid_argument("weight must be even and >= 2");
}

std::int64_t isqrt(std::int64_t n) {
    auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
    while (r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

bool is_square_of_squarefree(std::int64_t n) {
    const std::int64_t r = isqrt(n);
    return r * r == n && is_squarefree_u64(static_cast<std::uint64_t>(r));
}

}  // namespace

Rational fricke_trace(std::int64_t N, int k) {
    check_weight(N, k);
    if (N <= 3 && k == 2) return Rational(0);  // genus 0: S_2(N) is empty
    switch (N) {
        case 1: return Rational(k / 12 - (k % 12 == 2 ? 1 : 0));
        case 2: return Rational(3 * (k / 4) - 1);
        case 3: return Rational(1 - (k % 3));  // 1 - 3 {k/3}
        case 4: throw Inapplicable("the Fricke trace formula needs N > 4");
        default: break;
    }
    const Rational half_fixed = epsilon(N) * class_number(-4 * N) / 2;
    Rational t;
    if (k == 2)
        t = 1 - half_fixed;
    else
        t = k % 4 == 0 ? Rational(half_fixed) : Rational(-half_fixed);
    t.canonicalize();
    return t;
}

bool excluded_level(std::int64_t N) {
    if (N < 1) return false;
    for (std::int64_t m : {1, 2, 3, 4})
        if (N % m == 0 && is_square_of_squarefree(N / m)) return true;
    return false;
}

Rational eta_sum(std::int64_t N, int k) {
    check_weight(N, k);
    if (excluded_level(N)) throw ExcludedLevel("level " + std::to_string(N) + " is of the form R^2, 2R^2, 3R^2 or 4R^2");
    Rational s = 0;
    for (std::int64_t R = 1; R * R <= N; ++R) {
        if (N % (R * R) != 0) continue;
        const int mu = moebius_u64(static_cast<std::uint64_t>(R));
        if (mu == 0) continue;
        s += mu * fricke_trace(N / (R * R), k);
    }
    s.canonicalize();
    return s;
}

double eta_bound_shape(std::int64_t N) {
    const double n = static_cast<double>(N);
    const double ll = std::log(std::log(n));
    return std::sqrt(n) * std::log(n) * ll * ll;
}

TraceReport trace_report(std::int64_t N, int k) {
    check_weight(N, k);
    TraceReport r;
    r.N = N;
    r.k = k;
    r.h = class_number(-4 * N);
    r.epsilon = epsilon(N);
    try {
        r.trace = fricke_trace(N, k);
    } catch (const Inapplicable&) {
        r.trace_applicable = false;
        r.applicable = false;
    }
    if (excluded_level(N)) {
        r.applicable = false;
    } else if (r.applicable) {
        r.eta_sum = eta_sum(N, k);
    }
    return r;
}

std::string csv_header(const TraceReport&) { return "N,k,h,epsilon,trace,eta_sum,applicable"; }

std::string csv_row(const TraceReport& r) {
    std::string s = std::to_string(r.N) + "," + std::to_string(r.k) + "," + std::to_string(r.h) + "," +
                    to_string(r.epsilon) + ",";
    s += r.trace_applicable ? to_string(r.trace) : std::string();
    s += ",";
    s += r.applicable ? to_string(r.eta_sum) : std::string();
    s += r.applicable ? ",true" : ",false";
    return s;
}

}  // namespace rootnum
