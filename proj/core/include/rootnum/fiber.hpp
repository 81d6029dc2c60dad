#pragma once

// Rational fibers of an elliptic surface: local reduction data at each prime,
// local root numbers, and the global sign W = -prod_p w_p.

#include "rootnum/surface.hpp"

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace rootnum {

/// Sign values; 0 stands for "undetermined".
constexpr int kUndetermined = 0;

struct FiberCurve {
    Rational c4, c6, delta;  // c4^3 - c6^2 = 1728 delta, delta != 0
    Integer x = 1, y = 0;    // t = y/x; (1, 0) when built from invariants
};

/// Curve with the given invariants. Throws NotASurface if the discriminant is 0.
FiberCurve curve_from_invariants(const Rational& c4, const Rational& c6);

/// Curve from a Weierstrass equation [a1, a2, a3, a4, a6].
FiberCurve curve_from_ainvariants(const Integer& a1, const Integer& a2, const Integer& a3, const Integer& a4,
                                  const Integer& a6);

/// The fiber at t = y/x for coprime (x, y) != (0, 0); nothing when singular
/// (a pole of c4/c6 or a zero or pole of the discriminant). Throws NotCoprime.
std::optional<FiberCurve> specialize(const EllipticSurface& s, const Integer& x, const Integer& y);

/// Same as specialize at t, with t written in lowest terms.
std::optional<FiberCurve> specialize_at(const EllipticSurface& s, const Rational& t);

enum class LocalClass { Good, MultSplit, MultNonSplit, AddPotMult, AddPotGood };
std::string to_string(LocalClass k);

struct MinimalData {
    int k = 0;
    int v4 = 0, v6 = 0, vD = 0;  // kInfinite for a zero invariant
};

/// Shift k = min(floor(v(c4)/4), floor(v(c6)/6), floor(v(D)/12)) and the
/// valuations of p^-4k c4, p^-6k c6, p^-12k D. Minimal for p >= 5.
MinimalData minimalize_at(const Rational& c4, const Rational& c6, const Rational& delta, const Integer& p);

/// Kraus's criterion: (c4, c6) come from a model integral at p (p = 2, 3;
/// always true for p >= 5 once c4, c6 are p-integral).
bool kraus_integral(const Rational& c4, const Rational& c6, const Rational& delta, unsigned p);

struct OracleKey {
    unsigned p = 2;
    int v4 = 0, v6 = 0, vD = 0;
    Integer c4res, c6res;  // residues modulo p^a, a = 6 at 2 and 4 at 3

    friend bool operator<(const OracleKey& a, const OracleKey& b) {
        return std::tie(a.p, a.v4, a.v6, a.vD, a.c4res, a.c6res) < std::tie(b.p, b.v4, b.v6, b.vD, b.c4res, b.c6res);
    }
    friend bool operator==(const OracleKey& a, const OracleKey& b) {
        return std::tie(a.p, a.v4, a.v6, a.vD, a.c4res, a.c6res) == std::tie(b.p, b.v4, b.v6, b.vD, b.c4res, b.c6res);
    }
};

/// Residue modulus exponent for the table at p.
unsigned oracle_modulus_exponent(unsigned p);

/// Local root numbers at 2 and 3 for additive reduction, keyed by minimal data.
///
/// Text format, one entry per line: `p v4 v6 vD c4res c6res w`, where a zero
/// invariant has valuation `inf`, residues lie in [0, p^a) and w is 1 or -1.
/// `#` starts a comment. Duplicate keys are an error.
class OracleTable {
public:
    static OracleTable parse(std::istream& in);
    static OracleTable load(const std::string& path);

    void insert(const OracleKey& key, int w);
    std::optional<int> lookup(const OracleKey& key) const;
    std::size_t size() const { return entries_.size(); }

    void write(std::ostream& out) const;

private:
    std::map<OracleKey, int> entries_;
};

struct LocalDatum {
    Integer p;
    int k = 0;                // shift to the minimal model
    int v4 = 0, v6 = 0, vD = 0;  // minimal valuations
    Rational c4, c6;          // minimal invariants p^-4k c4, p^-6k c6
    LocalClass klass = LocalClass::Good;
    int w = 1;                // +1, -1 or kUndetermined
    bool from_table = false;
};

/// Reduction data at p, with w filled in from the closed formulas and, for
/// additive reduction at 2 and 3, from the table when one is given.
LocalDatum local_datum(const FiberCurve& f, const Integer& p, const OracleTable* oracle = nullptr);

/// The closed-form local root number; kUndetermined for additive reduction at 2
/// (and for additive potentially good reduction at 3).
int local_root_number(const LocalDatum& d);

/// Table key for a local datum at 2 or 3.
OracleKey oracle_key(const LocalDatum& d);

struct FiberReport {
    FiberCurve curve;
    std::vector<LocalDatum> locals;  // bad primes in increasing order
    int w_infinity = -1;
    int global = kUndetermined;
    std::vector<Integer> undetermined_primes;
};

/// Global root number -prod w_p. Throws FactorizationIncomplete.
FiberReport global_root_number(const FiberCurve& f, const OracleTable* oracle = nullptr,
                               const FactorBudget& budget = {});

/// The same with the bad primes drawn from `candidates`, which must contain
/// every prime dividing the numerator or denominator of delta and the
/// denominators of c4 and c6. Skips the factorization of delta.
FiberReport global_root_number_over(const FiberCurve& f, const std::vector<Integer>& candidates,
                                    const OracleTable* oracle = nullptr);

/// Factors delta(t) fiberwise: the rational numbers whose prime divisors
/// cover the bad primes of every fiber, as forms in (x, y) plus a constant.
struct PrimeCover {
    std::vector<HomPoly> forms;  // includes x for the place at infinity
    Integer constant = 1;
};
PrimeCover prime_cover(const EllipticSurface& s);

/// Candidate primes of the fiber at (x, y) from a cover. Throws
/// FactorizationIncomplete.
std::vector<Integer> cover_primes(const PrimeCover& c, const Integer& x, const Integer& y,
                                  const FactorBudget& budget = {});

}  // namespace rootnum
