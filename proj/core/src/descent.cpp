#include "rootnum/descent.hpp"

#include "rootnum/errors.hpp"
#include "shard.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace rootnum {

namespace {

Rational canon(Rational q) {
    q.canonicalize();
    return q;
}

Rational eval_q(const IntPoly& f, const Rational& x) { return f.eval(x); }

std::size_t bits(const Rational& q) {
    return std::max(mpz_sizeinbase(q.get_num_mpz_t(), 2), mpz_sizeinbase(q.get_den_mpz_t(), 2));
}

}  // namespace

// ------------------------------------------------------------ norm forms

Integer QuadEmbedding::norm(const Integer& x, const Integer& y) const {
    // (p + q sqrt D) with p = x p1 + y p2, q = x q1 + y q2
    const Rational p = alpha1.p * x + alpha2.p * y;
    const Rational q = alpha1.q * x + alpha2.q * y;
    const Rational n = canon(p * p - Rational(D) * q * q);
    if (n.get_den() != 1) throw std::logic_error("QuadEmbedding::norm: non-integral norm");
    return n.get_num();
}

QuadEmbedding quadform_embedding(const Integer& a, const Integer& b, const Integer& c) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g != 1) throw std::invalid_argument("quadform_embedding: form is not primitive");
    QuadEmbedding e;
    e.a = a;
    e.b = b;
    e.c = c;
    e.D = b * b - 4 * a * c;
    if (a == 0 || (e.D >= 0 && exact_sqrt(e.D)))
        throw FormReducible("quadform_embedding: discriminant " + e.D.get_str() + " is a square");
    e.alpha1 = {Rational(a), Rational(0)};
    e.alpha2 = {canon(Rational(b, 2)), Rational(1, 2)};
    return e;
}

// ------------------------------------------------------------ curves

void WeierstrassTwist::validate() const {
    if (d == 0 || !is_squarefree(d)) throw std::invalid_argument("WeierstrassTwist: d must be square-free");
    const IntPoly cubic(std::vector<Integer>{a6, a4, a2, Integer(1)});
    if (discriminant(cubic) == 0) throw std::invalid_argument("WeierstrassTwist: singular cubic");
}

bool WeierstrassTwist::contains(const CurvePoint& P) const {
    if (P.infinity) return true;
    const Rational& x = P.x;
    return Rational(d) * P.y * P.y == x * x * x + Rational(a2) * x * x + Rational(a4) * x + Rational(a6);
}

CurvePoint WeierstrassTwist::negate(const CurvePoint& P) const {
    if (P.infinity) return P;
    return CurvePoint::at(P.x, -P.y);
}

CurvePoint WeierstrassTwist::add(const CurvePoint& P, const CurvePoint& Q) const {
    if (P.infinity) return Q;
    if (Q.infinity) return P;
    Rational lambda;
    if (P.x == Q.x) {
        if (P.y != Q.y || P.y == 0) return CurvePoint{};
        lambda = canon((3 * P.x * P.x + 2 * Rational(a2) * P.x + Rational(a4)) / (2 * Rational(d) * P.y));
    } else {
        lambda = canon((Q.y - P.y) / (Q.x - P.x));
    }
    // the chord y = lambda x + nu meets d y^2 = cubic where x1 + x2 + x3 = d lambda^2 - a2
    const Rational x3 = canon(Rational(d) * lambda * lambda - Rational(a2) - P.x - Q.x);
    const Rational y3 = canon(-(lambda * (x3 - P.x) + P.y));
    return CurvePoint::at(x3, y3);
}

CurvePoint WeierstrassTwist::mul(const CurvePoint& P, std::int64_t n) const {
    CurvePoint base = n < 0 ? negate(P) : P;
    std::uint64_t k = n < 0 ? static_cast<std::uint64_t>(-(n + 1)) + 1 : static_cast<std::uint64_t>(n);
    CurvePoint acc;
    while (k) {
        if (k & 1) acc = add(acc, base);
        base = dbl(base);
        k >>= 1;
    }
    return acc;
}

// ------------------------------------------------------------ quartics

WeierstrassTwist quartic_twist(const IntPoly& f, const Integer& d) {
    if (f.degree() != 4) throw std::invalid_argument("quartic_twist: f must have degree 4");
    const Integer &a0 = f[0], &a1 = f[1], &a2 = f[2], &a3 = f[3], &a4 = f[4];
    WeierstrassTwist E;
    E.d = d;
    E.a2 = a2;
    E.a4 = a1 * a3 - 4 * a0 * a4;
    E.a6 = -(4 * a0 * a2 * a4 - a1 * a1 * a4 - a0 * a3 * a3);
    return E;
}

QuarticMap::QuarticMap(const IntPoly& f, const Integer& d, const Rational& r, const Rational& s)
    : f_(f), d_(d), r_(canon(r)), s_(canon(s)) {
    if (f.degree() != 4) throw std::invalid_argument("QuarticMap: f must have degree 4");
    if (d == 0) throw BasePointInvalid("QuarticMap: d must be nonzero");
    if (s_ == 0) throw BasePointInvalid("QuarticMap: base point has s = 0");
    const Rational fr = eval_q(f, r_);
    if (Rational(d) * s_ * s_ != fr) throw BasePointInvalid("QuarticMap: (r, s) is not on d y^2 = f(x)");
    const IntPoly d1 = f.derivative(), d2 = d1.derivative(), d3 = d2.derivative(), d4 = d3.derivative();
    f1_ = eval_q(d1, r_);
    f2_ = eval_q(d2, r_);
    f3_ = eval_q(d3, r_);
    f4_ = eval_q(d4, r_);
    const Rational D(d);
    A_.A1 = canon(f1_ / s_ / D);
    A_.A2 = canon((f2_ / 2 - f1_ * f1_ / (4 * fr)) / D);
    A_.A3 = canon(2 * s_ / D * f3_ / 6);
    A_.A4 = canon(-4 * fr * (f4_ / 24) / (D * D));
    A_.A6 = canon(A_.A2 * A_.A4);
    E_ = quartic_twist(f, d);
}

CurvePoint QuarticMap::operator()(const Rational& x, const Rational& y) const {
    const Rational D(d_);
    if (D * y * y != eval_q(f_, x)) throw std::invalid_argument("QuarticMap: point is not on the quartic");
    const Rational x1 = canon(x - r_), y1 = y;
    Rational x2, y2;
    if (x1 == 0) {
        if (y1 == s_) return CurvePoint{};
        // (r, -s): both numerators vanish to the order of the denominators, so
        // expand y1 = -s sqrt(1 + u) along the curve and read off the limits
        using Series = std::array<Rational, 4>;
        auto mul = [](const Series& a, const Series& b) {
            Series c{};
            for (std::size_t i = 0; i < 4; ++i)
                for (std::size_t j = 0; i + j < 4; ++j) c[i + j] += a[i] * b[j];
            return c;
        };
        const Rational s2 = s_ * s_;
        const Series u{Rational(0), canon(f1_ / D / s2), canon(f2_ / (2 * D) / s2), canon(f3_ / (6 * D) / s2)};
        const Series u2 = mul(u, u), u3 = mul(u2, u);
        Series y{};
        for (std::size_t i = 0; i < 4; ++i) y[i] = canon(-s_ * ((i == 0 ? 1 : 0) + u[i] / 2 - u2[i] / 8 + u3[i] / 16));
        // the lower-order terms of both numerators cancel
        x2 = canon(2 * s_ * y[2]);
        y2 = canon(4 * s2 * y[3]);
    } else {
        x2 = canon((2 * s_ * (y1 + s_) + f1_ * x1 / D) / (x1 * x1));
        y2 = canon((4 * s_ * s_ * (y1 + s_) + 2 * s_ * (f1_ * x1 / D + f2_ * x1 * x1 / (2 * D)) -
                    (f1_ / D) * (f1_ / D) * x1 * x1 / (2 * s_)) /
                   (x1 * x1 * x1));
    }
    const Rational a3(f_[3]), a4(f_[4]);
    const Rational x3 = canon(D * x2 + r_ * (a3 + 2 * a4 * r_));
    const Rational y3 = canon(D / 2 * (2 * y2 + A_.A1 * x2 + A_.A3));
    return CurvePoint::at(x3, y3);
}

QuarticMap quartic_to_weierstrass(const IntPoly& f, const Integer& d, const Rational& r, const Rational& s) {
    return QuarticMap(f, d, r, s);
}

// ------------------------------------------------------------ heights

double naive_height(const CurvePoint& P) {
    if (P.infinity) return 0.0;
    const Rational x = canon(P.x);
    const Integer& num = x.get_num();
    const Integer& den = x.get_den();
    if (num == 0) return log_abs(den);
    return std::max(log_abs(num), log_abs(den));
}

double canonical_height(const WeierstrassTwist& E, const CurvePoint& P, unsigned n, std::size_t max_bits) {
    if (!E.contains(P)) throw std::invalid_argument("canonical_height: point is not on the curve");
    CurvePoint Q = P;
    for (unsigned i = 0; i < n; ++i) {
        if (Q.infinity) return 0.0;
        Q = E.dbl(Q);
        if (!Q.infinity && (bits(Q.x) > max_bits || bits(Q.y) > max_bits))
            throw CoordinateBlowup("canonical_height: coordinates exceed " + std::to_string(max_bits) + " bits");
    }
    if (Q.infinity) return 0.0;
    return 0.5 * std::ldexp(naive_height(Q), -2 * static_cast<int>(n));
}

// ------------------------------------------------------------ searches

std::vector<TwistSolution> twist_point_search(const HomPoly& F, const Integer& d, std::int64_t N, unsigned jobs) {
    if (F.degree() != 3 && F.degree() != 4) throw std::invalid_argument("twist_point_search: degree must be 3 or 4");
    if (d == 0) throw std::invalid_argument("twist_point_search: d must be nonzero");
    using List = std::vector<TwistSolution>;
    List out = detail::shard<List>(
        -N, N, jobs,
        [&](std::int64_t lo, std::int64_t hi) {
            List part;
            for (std::int64_t x = lo; x <= hi; ++x)
                for (std::int64_t z = -N; z <= N; ++z) {
                    if (std::gcd(x < 0 ? -x : x, z < 0 ? -z : z) != 1) continue;
                    const Integer X(static_cast<long>(x)), Z(static_cast<long>(z));
                    const Integer v = F.eval(X, Z);
                    if (!mpz_divisible_p(v.get_mpz_t(), d.get_mpz_t())) continue;
                    const Integer w = v / d;
                    if (w < 0) continue;
                    const auto y = exact_sqrt(w);
                    if (!y) continue;
                    part.push_back({X, *y, Z});
                    if (*y != 0) part.push_back({X, -*y, Z});
                }
            return part;
        },
        [](List& a, const List& b) { a.insert(a.end(), b.begin(), b.end()); });
    std::sort(out.begin(), out.end());
    return out;
}

Integer packing_count_bound(const Rational& c1, const Rational& c2, unsigned r) {
    if (c1 <= 0 || c2 < c1) throw std::invalid_argument("packing_count_bound: need 0 < c1 <= c2");
    const Rational q = canon(c2 / c1);
    const auto sn = exact_sqrt(q.get_num());
    const auto sd = exact_sqrt(q.get_den());
    if (sn && sd) {
        const Rational base = canon(1 + 2 * Rational(*sn, *sd));
        Integer num, den;
        mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), r);
        mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), r);
        Integer fl;
        mpz_fdiv_q(fl.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        return fl;
    }
    // irrational base: the power is never an integer, so a wide float floor is exact
    const mp_bitcnt_t prec = 256 + 8 * static_cast<mp_bitcnt_t>(r);
    mpf_class v(q, prec);
    v = sqrt(v);
    v = 1 + 2 * v;
    mpf_class p(1, prec);
    for (unsigned i = 0; i < r; ++i) p *= v;
    mpf_class fl(0, prec);
    mpf_floor(fl.get_mpf_t(), p.get_mpf_t());
    return Integer(fl);
}

}  // namespace rootnum
