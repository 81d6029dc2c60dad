#pragma once

// Families with prescribed j-invariant and twist, and families whose
// multiplicative places are a prescribed square-free form.

#include "rootnum/surface.hpp"

#include <optional>
#include <vector>

namespace rootnum {

/// c4 = d^2 j (j - 1728), c6 = d^3 j (j - 1728)^2. Throws DegenerateJ when j
/// is identically 0 or 1728, std::invalid_argument when d = 0.
EllipticSurface from_j_d(const RatFunc& j, const RatFunc& d);

/// j = R3 / (R1 R2^2 prod Q_i^k_i), d = R4 R5 prod Q_i^k_i, with R5 the
/// radical of R2 and Q_i(t) = P_i(1, t) for the factors P_i != x of P.
struct FamilyRecipe {
    HomPoly target;                                // P, normalized
    std::vector<std::pair<IntPoly, unsigned>> Q;  // (Q_i, k_i)
    IntPoly R1{1}, R2{1}, R3{1}, R4{1};
    RatFunc j, d;

    EllipticSurface surface() const { return from_j_d(j, d); }
};

/// Assembles j and d from the parts, checking the coprimality, square-freeness
/// and degree constraints. Throws TargetUnachievable when one fails.
FamilyRecipe make_recipe(const HomPoly& P, const std::vector<unsigned>& k, const IntPoly& R1, const IntPoly& R2,
                         const IntPoly& R3, const IntPoly& R4);

/// Minimal recipe with M = P up to a unit: all k_i = 1 and R_i = 1, except
/// R3 = t^n + c when x | P. The result is checked with analyze(); throws
/// TargetUnachievable when no candidate gives M = P.
FamilyRecipe target_m(const HomPoly& P);

/// The largest of deg_irr P, R1, R2, R3 and R3 - 1728 R1 R2^2 prod Q_i^k_i,
/// or 1 when all of these are 0.
unsigned predict_deg_irr_bprime(const FamilyRecipe& r);

}  // namespace rootnum
