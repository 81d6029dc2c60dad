#pragma once

// Elliptic surfaces over Q(t) given by (c4, c6): homogenized invariants,
// reduction type at every place, and the forms M, B, B'.

#include "rootnum/poly.hpp"

#include <limits>
#include <string>
#include <vector>

namespace rootnum {

/// y^2 = x^3 - c4/48 x - c6/864 over Q(t).
struct EllipticSurface {
    RatFunc c4;
    RatFunc c6;
};

/// Throws NotASurface when the discriminant vanishes identically.
void validate(const EllipticSurface& s);

/// (c4^3 - c6^2) / 1728.
RatFunc discriminant(const EllipticSurface& s);

/// c4^3 / discriminant.
RatFunc j_invariant(const EllipticSurface& s);
bool is_constant_j(const EllipticSurface& s);

enum class ReductionClass { Good, Multiplicative, AddPotMult, AddPotGood };
enum class Badness { NotBad, HalfBad, QuiteBad };

std::string to_string(ReductionClass k);
std::string to_string(Badness b);

/// Exponent standing for the identically-zero invariant.
constexpr int kInfinite = std::numeric_limits<int>::max();

struct PlaceRecord {
    HomPoly place;  // normalized irreducible form; x for the degree place
    bool degree_place = false;
    int e4 = 0;  // kInfinite when c4 = 0
    int e6 = 0;  // kInfinite when c6 = 0
    int eD = 0;
    ReductionClass klass = ReductionClass::Good;
    Badness badness = Badness::NotBad;
};

struct HomogenizedInvariants {
    HomPoly C4, C6, D;  // C4 (resp. C6) is the zero form when c4 (resp. c6) vanishes
    Integer q1 = 1;     // integer clearing factor
};

/// C4 = Q^4 c4(y/x), C6 = Q^6 c6(y/x), D = Q^12 Delta(y/x) with Q minimal.
HomogenizedInvariants homogenize_invariants(const EllipticSurface& s);

/// Classification from the exponents; exposed for tests.
ReductionClass classify_exponents(int e4, int e6, int eD);
Badness badness_of(int e4, int e6, int eD);

/// One record per irreducible factor of D, plus the degree place.
std::vector<PlaceRecord> classify_places(const HomPoly& C4, const HomPoly& C6, const HomPoly& D);

struct MBB {
    HomPoly M, B, Bprime;
};

MBB mbb(const std::vector<PlaceRecord>& places);

struct SurfaceAnalysis {
    EllipticSurface surface;
    RatFunc j;
    bool j_constant = false;
    HomogenizedInvariants hom;
    std::vector<PlaceRecord> places;
    HomPoly M, B, Bprime;
};

SurfaceAnalysis analyze(const EllipticSurface& s);

/// Multiplicity of the irreducible form p in f (kInfinite when f = 0).
int multiplicity(const HomPoly& p, const HomPoly& f);

}  // namespace rootnum
