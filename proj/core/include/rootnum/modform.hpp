#pragma once

// Class numbers of binary quadratic forms and the trace of the Fricke
// involution W_N on S_k(N), with the Moebius-inverted newform sum.

#include "rootnum/arith.hpp"

#include <cstdint>
#include <string>

namespace rootnum {

/// Number of reduced primitive positive definite forms of discriminant D.
/// Throws BadDiscriminant unless D < 0 and D = 0, 1 mod 4.
std::int64_t class_number(std::int64_t D);

/// 2 if N = 7 mod 8, 4/3 if N = 3 mod 8, 1 otherwise.
Rational epsilon(std::int64_t N);

/// Tr(W_N, S_k(N)) for even k >= 2. Throws Inapplicable for N = 4 and
/// std::invalid_argument for odd or nonpositive k, N < 1.
Rational fricke_trace(std::int64_t N, int k);

/// N = R^2, 2R^2, 3R^2 or 4R^2 with R square-free.
bool excluded_level(std::int64_t N);

/// sum over R^2 M = N of mu(R) Tr(W_M, S_k(M)). Throws ExcludedLevel.
Rational eta_sum(std::int64_t N, int k);

/// sqrt(N) log N (log log N)^2, the shape of the upper bound for eta_sum.
double eta_bound_shape(std::int64_t N);

struct TraceReport {
    std::int64_t N = 0;
    int k = 2;
    std::int64_t h = 0;  // h(-4N)
    Rational epsilon;
    Rational trace;
    Rational eta_sum;
    bool trace_applicable = true;
    bool applicable = true;  // false for N = 4 and excluded levels
};

TraceReport trace_report(std::int64_t N, int k);

/// N,k,h,epsilon,trace,eta_sum,applicable
std::string csv_header(const TraceReport&);
std::string csv_row(const TraceReport& r);

}  // namespace rootnum
