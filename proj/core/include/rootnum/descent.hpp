#pragma once

// Quadratic twists d y^2 = f(x): norm forms for binary quadratic forms, the
// quartic-to-Weierstrass map, the group law, heights and point searches.

#include "rootnum/poly.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace rootnum {

/// p + q sqrt(D) in Q(sqrt(D)).
struct QuadElement {
    Rational p, q;
};

/// a Q(x, y) = Norm(x alpha1 + y alpha2) with alpha1 = a, alpha2 = (b + sqrt(D)) / 2.
struct QuadEmbedding {
    Integer a, b, c, D;
    QuadElement alpha1, alpha2;

    /// Norm of x alpha1 + y alpha2, computed from the embedding.
    Integer norm(const Integer& x, const Integer& y) const;
};

/// Throws FormReducible when b^2 - 4ac is a square (including a = 0) and
/// std::invalid_argument for an imprimitive form.
QuadEmbedding quadform_embedding(const Integer& a, const Integer& b, const Integer& c);

struct CurvePoint {
    bool infinity = true;
    Rational x, y;

    static CurvePoint at(const Rational& x, const Rational& y) { return {false, x, y}; }
    friend bool operator==(const CurvePoint&, const CurvePoint&) = default;
};

/// E_d : d y^2 = x^3 + a2 x^2 + a4 x + a6.
struct WeierstrassTwist {
    Integer d = 1, a2 = 0, a4 = 0, a6 = 0;

    /// Throws std::invalid_argument unless d is square-free and the cubic is separable.
    void validate() const;
    bool contains(const CurvePoint& P) const;

    CurvePoint negate(const CurvePoint& P) const;
    CurvePoint add(const CurvePoint& P, const CurvePoint& Q) const;
    CurvePoint dbl(const CurvePoint& P) const { return add(P, P); }
    CurvePoint mul(const CurvePoint& P, std::int64_t n) const;

    /// The same cubic with d = 1.
    WeierstrassTwist untwisted() const { return {1, a2, a4, a6}; }
};

/// The map from C_d : d y^2 = f(x) (f quartic) to E_d determined by a
/// rational point (r, s) with s != 0.
class QuarticMap {
public:
    /// Throws BasePointInvalid unless d s^2 = f(r) and s != 0.
    QuarticMap(const IntPoly& f, const Integer& d, const Rational& r, const Rational& s);

    const WeierstrassTwist& target() const { return E_; }

    /// Image of (x, y) on C_d; the base point goes to infinity. Throws
    /// std::invalid_argument when (x, y) is not on C_d.
    CurvePoint operator()(const Rational& x, const Rational& y) const;

    /// Coefficients of the intermediate long Weierstrass model in (x2, y2).
    struct Intermediate {
        Rational A1, A2, A3, A4, A6;
    };
    const Intermediate& intermediate() const { return A_; }

private:
    IntPoly f_;
    Integer d_;
    Rational r_, s_;
    Rational f1_, f2_, f3_, f4_;  // derivatives of f at r
    Intermediate A_;
    WeierstrassTwist E_;
};

/// E_d for the quartic f = a4 x^4 + ... + a0:
/// d y^2 = x^3 + a2 x^2 + (a1 a3 - 4 a0 a4) x - (4 a0 a2 a4 - a1^2 a4 - a0 a3^2).
WeierstrassTwist quartic_twist(const IntPoly& f, const Integer& d);

QuarticMap quartic_to_weierstrass(const IntPoly& f, const Integer& d, const Rational& r, const Rational& s);

/// log max(|num x|, |den x|); 0 at infinity.
double naive_height(const CurvePoint& P);

/// 1/2 4^-n h_x([2^n] P); 0 when the orbit reaches infinity. Throws
/// CoordinateBlowup if a coordinate exceeds `max_bits`.
double canonical_height(const WeierstrassTwist& E, const CurvePoint& P, unsigned n = 4,
                        std::size_t max_bits = 1u << 22);

struct TwistSolution {
    Integer x, y, z;
    friend bool operator==(const TwistSolution&, const TwistSolution&) = default;
    friend bool operator<(const TwistSolution& a, const TwistSolution& b) {
        if (a.x != b.x) return a.x < b.x;
        if (a.z != b.z) return a.z < b.z;
        return a.y < b.y;
    }
};

/// All (x, y, z) with |x|, |z| <= N, gcd(x, z) = 1 and d y^2 = F(x, z), for a
/// binary form F of degree 3 or 4. Sorted.
std::vector<TwistSolution> twist_point_search(const HomPoly& F, const Integer& d, std::int64_t N, unsigned jobs = 1);

/// floor((1 + 2 sqrt(c2 / c1))^r).
Integer packing_count_bound(const Rational& c1, const Rational& c2, unsigned r);

}  // namespace rootnum
