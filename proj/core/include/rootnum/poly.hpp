#pragma once

// Exact polynomials over Z/Q: univariate integer polynomials, rational
// functions in one variable t, and binary forms in (x, y).

#include "rootnum/arith.hpp"

#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace rootnum {

/// Univariate polynomial with integer coefficients, low degree first.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<Integer> coeffs);
    IntPoly(std::initializer_list<long> coeffs);

    static IntPoly constant(const Integer& c);
    static IntPoly monomial(const Integer& c, unsigned k);
    /// The polynomial t.
    static IntPoly t();

    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }

    /// Coefficient of t^i (zero beyond the degree).
    Integer operator[](std::size_t i) const { return i < c_.size() ? c_[i] : Integer(0); }
    const std::vector<Integer>& coeffs() const { return c_; }
    Integer lc() const { return c_.empty() ? Integer(0) : c_.back(); }

    /// Nonnegative gcd of the coefficients (0 for the zero polynomial).
    Integer content() const;
    /// f / content, sign fixed so the leading coefficient is positive.
    IntPoly primitive() const;
    IntPoly derivative() const;

    Integer eval(const Integer& v) const;
    Rational eval(const Rational& v) const;
    /// Homogeneous evaluation x^deg * f(y/x), with deg = degree().
    Integer eval_hom(const Integer& x, const Integer& y) const;

    /// t^n f(1/t); requires n >= degree().
    IntPoly reversed(unsigned n) const;

    IntPoly operator-() const;
    IntPoly& operator+=(const IntPoly& o);
    IntPoly& operator-=(const IntPoly& o);
    IntPoly& operator*=(const IntPoly& o);
    IntPoly& operator*=(const Integer& k);
    friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
    friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator*(IntPoly a, const Integer& k) { return a *= k; }
    friend IntPoly operator*(const Integer& k, IntPoly a) { return a *= k; }
    friend bool operator==(const IntPoly&, const IntPoly&) = default;

    IntPoly pow(unsigned e) const;

    /// Ordering used to sort factor lists: by degree, then coefficients.
    friend bool operator<(const IntPoly& a, const IntPoly& b);

private:
    void trim();
    std::vector<Integer> c_;
};

/// Quotient of f by g when g divides f in Z[t], nothing otherwise.
std::optional<IntPoly> divide_exact(const IntPoly& f, const IntPoly& g);

/// Pseudo-division: lc(g)^(deg f - deg g + 1) f = q g + r.
std::pair<IntPoly, IntPoly> pseudo_divmod(const IntPoly& f, const IntPoly& g);

/// True when g divides f in Q[t].
bool divides_q(const IntPoly& g, const IntPoly& f);

/// Primitive part of f/g, for g dividing f in Q[t]; throws otherwise.
IntPoly quotient_q(const IntPoly& f, const IntPoly& g);

/// Primitive gcd in Q[t] with positive leading coefficient; gcd(0, 0) = 0.
IntPoly gcd(const IntPoly& f, const IntPoly& g);

/// Sylvester determinant Res(f, g) for nonzero f, g.
Integer resultant(const IntPoly& f, const IntPoly& g);

/// Classical discriminant (-1)^(n(n-1)/2) Res(f, f') / lc(f), so that
/// x^2 + bx + c has discriminant b^2 - 4c. Requires degree >= 1.
Integer discriminant(const IntPoly& f);

bool is_squarefree(const IntPoly& f);

/// Square-free decomposition of a nonzero polynomial: primitive pairwise
/// coprime parts with multiplicities, f = content * prod a_i^i.
std::vector<std::pair<IntPoly, unsigned>> squarefree_decomposition(const IntPoly& f);

/// F*G*H where A = F*H, B = G*H and F, G, H pairwise coprime; primitive with
/// positive leading coefficient. Throws NotSquarefree.
IntPoly lcm_sqfree(const IntPoly& a, const IntPoly& b);

struct FactorList {
    Integer content = 1;  // signed, so that content * prod f^e == input
    std::vector<std::pair<IntPoly, unsigned>> factors;  // primitive, lc > 0, sorted
};

constexpr unsigned kDefaultFactorDegreeBound = 24;

/// Factorization into irreducibles over Q. Throws DegreeTooLarge when the
/// square-free kernel (product of the distinct factors) exceeds the bound.
FactorList factor_q(const IntPoly& f, unsigned degree_bound = kDefaultFactorDegreeBound);

/// Largest degree of an irreducible factor (0 for constants).
unsigned deg_irr(const IntPoly& f);

/// Rational function scalar * num / den in Q(t).
///
/// num and den are primitive with positive leading coefficients and coprime;
/// zero is represented by scalar 0 over 1/1.
class RatFunc {
public:
    RatFunc() : RatFunc(Rational(0)) {}
    RatFunc(const Rational& c);  // NOLINT: constants convert implicitly
    RatFunc(long c) : RatFunc(Rational(c)) {}
    explicit RatFunc(const IntPoly& p);
    RatFunc(const Rational& scalar, const IntPoly& num, const IntPoly& den);

    static RatFunc t();

    const Rational& scalar() const { return scalar_; }
    const IntPoly& num() const { return num_; }
    const IntPoly& den() const { return den_; }

    bool is_zero() const { return scalar_ == 0; }
    bool is_constant() const { return is_zero() || (num_.is_constant() && den_.is_constant()); }
    bool is_polynomial() const { return den_.is_constant(); }

    /// Integer polynomial n and positive integer m with this = n / m, when a polynomial.
    std::pair<IntPoly, Integer> as_poly() const;

    /// Value at a rational point; nothing at a pole.
    std::optional<Rational> eval(const Rational& v) const;
    /// Value at t = y/x for coprime integers, x possibly 0 (then the value at infinity).
    std::optional<Rational> eval_at(const Integer& x, const Integer& y) const;

    /// Order of vanishing at the irreducible q (nothing for the zero function).
    std::optional<int> valuation(const IntPoly& q) const;
    /// Order at infinity, deg den - deg num (nothing for the zero function).
    std::optional<int> valuation_infinity() const;

    RatFunc operator-() const;
    RatFunc inverse() const;
    RatFunc pow(int e) const;
    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inverse(); }
    friend bool operator==(const RatFunc&, const RatFunc&) = default;

private:
    Rational scalar_;
    IntPoly num_;
    IntPoly den_;
};

/// Binary form of degree n: coefficient i multiplies x^i y^(n-i).
///
/// With this layout P(x, 1) has the coefficient list itself and P(1, t) is
/// its reversal.
class HomPoly {
public:
    HomPoly() : HomPoly(0, {Integer(0)}) {}
    HomPoly(unsigned degree, std::vector<Integer> coeffs);

    static HomPoly constant(const Integer& c);
    static HomPoly x();
    static HomPoly y();
    /// x^n q(y/x); requires n >= deg q.
    static HomPoly from_t(const IntPoly& q, unsigned n);

    unsigned degree() const { return deg_; }
    const Integer& coeff(unsigned i) const { return c_[i]; }
    const std::vector<Integer>& coeffs() const { return c_; }
    bool is_zero() const;

    /// P(1, t).
    IntPoly at_x1() const;
    /// P(x, 1).
    IntPoly at_y1() const;
    Integer eval(const Integer& x, const Integer& y) const;

    Integer content() const;
    /// Primitive, with the coefficient of the highest nonzero power of x positive.
    HomPoly normalized() const;

    friend HomPoly operator*(const HomPoly& a, const HomPoly& b);
    friend HomPoly operator+(const HomPoly& a, const HomPoly& b);
    HomPoly pow(unsigned e) const;
    HomPoly scaled(const Integer& k) const;
    friend bool operator==(const HomPoly&, const HomPoly&) = default;
    friend bool operator<(const HomPoly& a, const HomPoly& b);

private:
    unsigned deg_;
    std::vector<Integer> c_;
};

/// Homogenization x^(deg q) q(y/x) of a place q of Q(t).
HomPoly homogenize_place(const IntPoly& q);
/// The degree place, P = x.
HomPoly deg_place();

/// Nonnegative lcm of the two dehomogenized resultants Res(f, f').
Integer discriminant_hom(const HomPoly& f);

/// a | b in Q[x, y].
bool divides_hom(const HomPoly& a, const HomPoly& b);
/// a and b agree up to a nonzero rational factor.
bool equal_up_to_unit(const HomPoly& a, const HomPoly& b);

/// Factorization of a nonzero form into normalized irreducible forms.
struct HomFactorList {
    Integer content = 1;
    std::vector<std::pair<HomPoly, unsigned>> factors;
};
HomFactorList factor_hom(const HomPoly& f, unsigned degree_bound = kDefaultFactorDegreeBound);

bool is_squarefree_hom(const HomPoly& f);

/// Sparse integer polynomial in two variables; (i, j) keys x^i y^j.
struct BiPoly {
    std::map<std::pair<unsigned, unsigned>, Integer> terms;  // no zero entries

    static BiPoly from_form(const HomPoly& f);
    static BiPoly from_x(const IntPoly& f);

    Integer eval(const Integer& x, const Integer& y) const;
    unsigned total_degree() const;
    bool is_zero() const { return terms.empty(); }
    bool is_homogeneous() const;
    bool depends_on_x() const;
    bool depends_on_y() const;
    /// Throws std::invalid_argument unless homogeneous.
    HomPoly to_form() const;
    /// Polynomial in x alone; throws std::invalid_argument if y occurs.
    IntPoly in_x() const;
};
unsigned deg_irr(const HomPoly& f);

}  // namespace rootnum
