#pragma once

// Finite-N averages and autocorrelations over progressions and over coprime
// pairs restricted to sectors and lattice cosets.

#include "rootnum/fiber.hpp"
#include "rootnum/poly.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace rootnum {

/// A coset offset + L of a full-rank sublattice L of Z^2.
///
/// L is stored in Hermite normal form: it is spanned by (a, b) and (0, d)
/// with a, d > 0 and 0 <= b < d, so (u, v) is in L iff a | u and
/// d | v - b u / a.
class LatticeCoset {
public:
    /// Z^2 itself.
    LatticeCoset() = default;
    /// The lattice spanned by the rows u and v, shifted by offset.
    LatticeCoset(std::array<std::int64_t, 2> u, std::array<std::int64_t, 2> v,
                 std::array<std::int64_t, 2> offset = {0, 0});

    std::int64_t a() const { return a_; }
    std::int64_t b() const { return b_; }
    std::int64_t d() const { return d_; }
    std::array<std::int64_t, 2> offset() const { return {ox_, oy_}; }
    std::int64_t index() const { return a_ * d_; }

    bool contains(std::int64_t x, std::int64_t y) const;
    std::string describe() const;

private:
    std::int64_t a_ = 1, b_ = 0, d_ = 1;
    std::int64_t ox_ = 0, oy_ = 0;
};

/// A finite union of angular intervals at the origin.
///
/// Each interval runs counterclockwise from the ray through `from` to the ray
/// through `to`; when both rays coincide it is the whole turn. Membership is
/// decided with integer cross and dot products only.
class Sector {
public:
    struct Interval {
        std::array<std::int64_t, 2> from, to;
        bool closed_from = true, closed_to = false;
    };

    /// The whole plane minus the origin.
    static Sector full();
    /// Open quadrant with the given signs of x and y.
    static Sector quadrant(int sx, int sy);
    /// The union of the four open quadrants.
    static Sector off_axes();
    /// Parses "all", "++", "+-", "-+", "--" or "off-axes".
    static Sector parse(const std::string& name);

    Sector() = default;
    explicit Sector(std::vector<Interval> parts);

    bool contains(std::int64_t x, std::int64_t y) const;
    const std::vector<Interval>& intervals() const { return parts_; }
    bool is_full() const { return full_; }
    std::string describe() const;

private:
    bool full_ = true;
    std::vector<Interval> parts_;
};

enum class SampleStatus { Ok, Singular, Undetermined, Incomplete };

struct Sample {
    long value = 0;
    SampleStatus status = SampleStatus::Ok;
};

using IntSampler = std::function<Sample(std::int64_t)>;
/// Called with a coprime pair (x, y) standing for t = y/x (x = 0 is infinity).
using PairSampler = std::function<Sample(std::int64_t, std::int64_t)>;

struct SkipTally {
    std::uint64_t singular = 0;  // counted with value +1, listed for information
    std::uint64_t undetermined = 0;
    std::uint64_t incomplete = 0;
};

struct AverageReport {
    std::string domain;
    Integer sum = 0;
    std::uint64_t count = 0;       // samples entering the mean
    std::uint64_t enumerated = 0;  // count + undetermined + incomplete
    SkipTally skipped;

    /// sum / count, or 0 when nothing was counted.
    Rational value() const;
    double numeric() const { return to_double(value()); }

    /// Pools two disjoint sweeps; associative and commutative.
    void merge(const AverageReport& other);
};

/// Mean of f(n) over 1 <= n <= N, n = a mod m.
AverageReport av_progression(const IntSampler& f, std::int64_t a, std::int64_t m, std::int64_t N,
                             unsigned jobs = 1);

/// Mean of f(n) f(n + k) over the same progression.
AverageReport autocov_progression(const IntSampler& f, std::int64_t a, std::int64_t m, std::int64_t k,
                                  std::int64_t N, unsigned jobs = 1);

/// Mean of f(y/x) over coprime (x, y) in S, L and [-N, N]^2.
AverageReport av_rational(const PairSampler& f, const Sector& S, const LatticeCoset& L, std::int64_t N,
                          unsigned jobs = 1);

/// Mean of f(y/x) f(y/x + t0) over the same domain.
AverageReport autocorr_rational(const PairSampler& f, const Sector& S, const LatticeCoset& L, const Rational& t0,
                                std::int64_t N, unsigned jobs = 1);

/// The root number of the fiber at t = y/x; singular fibers report Singular
/// (and count as +1), missing local data at 2 or 3 reports Undetermined.
PairSampler root_number_sampler(const EllipticSurface& s, const OracleTable* oracle = nullptr,
                                const FactorBudget& budget = {});

/// The same at integer t = n.
IntSampler root_number_sampler_int(const EllipticSurface& s, const OracleTable* oracle = nullptr,
                                   const FactorBudget& budget = {});

/// lambda and mu as samplers on n.
IntSampler liouville_sampler();
IntSampler moebius_sampler();

enum class ArithFunction { Liouville, Moebius };
std::string to_string(ArithFunction f);

/// Rectangular sample domain for polynomial sweeps.
struct BoxDomain {
    std::int64_t x_lo = 0, x_hi = 0, y_lo = 0, y_hi = 0;
    Sector sector;
    LatticeCoset lattice;
    bool coprime = true;
    Integer value_bound = 0;  // when positive, keep only |P(x, y)| <= value_bound
};

/// Mean of fn(P(x, y)) over the box; fn(0) = 0.
AverageReport sweep_poly(const BiPoly& P, ArithFunction fn, const BoxDomain& dom, unsigned jobs = 1,
                         const FactorBudget& budget = {});

/// Mean of lambda(P(n)) over 1 <= n <= N, n = a mod m.
AverageReport sweep_lambda_poly(const IntPoly& P, std::int64_t a, std::int64_t m, std::int64_t N,
                                unsigned jobs = 1, const FactorBudget& budget = {});

/// Mean of lambda(P(x, y)) over S, L and [-N, N]^2, with or without gcd(x, y) = 1.
AverageReport sweep_lambda_poly(const BiPoly& P, const Sector& S, const LatticeCoset& L, std::int64_t N,
                                bool coprime = true, unsigned jobs = 1, const FactorBudget& budget = {});

/// Splits [lo, hi] into `jobs` contiguous chunks, runs `work` on each in its
/// own thread and merges the results in chunk order.
AverageReport run_sharded(std::int64_t lo, std::int64_t hi, unsigned jobs,
                          const std::function<AverageReport(std::int64_t, std::int64_t)>& work);

}  // namespace rootnum
