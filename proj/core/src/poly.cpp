#include "rootnum/poly.hpp"

#include "rootnum/errors.hpp"

#include <algorithm>
#include <stdexcept>

namespace rootnum {

// ---------------------------------------------------------------- IntPoly

IntPoly::IntPoly(std::vector<Integer> coeffs) : c_(std::move(coeffs)) { trim(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
    for (long v : coeffs) c_.emplace_back(v);
    trim();
}

IntPoly IntPoly::constant(const Integer& c) { return IntPoly(std::vector<Integer>{c}); }

IntPoly IntPoly::monomial(const Integer& c, unsigned k) {
    std::vector<Integer> v(k + 1, Integer(0));
    v[k] = c;
    return IntPoly(std::move(v));
}

IntPoly IntPoly::t() { return monomial(1, 1); }

void IntPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Integer IntPoly::content() const {
    Integer g = 0;
    for (const auto& a : c_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

IntPoly IntPoly::primitive() const {
    if (is_zero()) return *this;
    Integer g = content();
    if (lc() < 0) g = -g;
    IntPoly r = *this;
    for (auto& a : r.c_) mpz_divexact(a.get_mpz_t(), a.get_mpz_t(), g.get_mpz_t());
    return r;
}

IntPoly IntPoly::derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Integer> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<unsigned long>(i);
    return IntPoly(std::move(d));
}

Integer IntPoly::eval(const Integer& v) const {
    Integer r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * v + *it;
    return r;
}

Rational IntPoly::eval(const Rational& v) const {
    // Horner in homogeneous form keeps everything integral until the end.
    const Integer& p = v.get_num();
    const Integer& q = v.get_den();
    if (is_zero()) return 0;
    Integer r = eval_hom(q, p);
    Integer d;
    mpz_pow_ui(d.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(degree()));
    Rational out(r, d);
    out.canonicalize();
    return out;
}

Integer IntPoly::eval_hom(const Integer& x, const Integer& y) const {
    // sum c_i y^i x^(n-i)
    if (is_zero()) return 0;
    Integer r = 0;
    Integer xp = 1;
    const int n = degree();
    std::vector<Integer> xpow(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) {
        xpow[static_cast<std::size_t>(i)] = xp;
        xp *= x;
    }
    for (int i = n; i >= 0; --i) r = r * y + c_[static_cast<std::size_t>(i)] * xpow[static_cast<std::size_t>(n - i)];
    return r;
}

IntPoly IntPoly::reversed(unsigned n) const {
    if (degree() > static_cast<int>(n)) throw std::invalid_argument("reversed: n below degree");
    std::vector<Integer> v(n + 1, Integer(0));
    for (std::size_t i = 0; i < c_.size(); ++i) v[n - i] = c_[i];
    return IntPoly(std::move(v));
}

IntPoly IntPoly::operator-() const {
    IntPoly r = *this;
    for (auto& a : r.c_) a = -a;
    return r;
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Integer(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Integer(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Integer> v(a.c_.size() + b.c_.size() - 1, Integer(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
    }
    return IntPoly(std::move(v));
}

IntPoly& IntPoly::operator*=(const IntPoly& o) { return *this = *this * o; }

IntPoly& IntPoly::operator*=(const Integer& k) {
    for (auto& a : c_) a *= k;
    trim();
    return *this;
}

IntPoly IntPoly::pow(unsigned e) const {
    IntPoly r = constant(1), b = *this;
    while (e) {
        if (e & 1) r *= b;
        e >>= 1;
        if (e) b = b * b;
    }
    return r;
}

bool operator<(const IntPoly& a, const IntPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (int i = a.degree(); i >= 0; --i) {
        const auto k = static_cast<std::size_t>(i);
        if (a.c_[k] != b.c_[k]) return a.c_[k] < b.c_[k];
    }
    return false;
}

// ---------------------------------------------------------------- division

std::optional<IntPoly> divide_exact(const IntPoly& f, const IntPoly& g) {
    if (g.is_zero()) throw std::invalid_argument("divide_exact: division by zero");
    if (f.is_zero()) return IntPoly{};
    if (f.degree() < g.degree()) return std::nullopt;
    std::vector<Integer> r = f.coeffs();
    const std::size_t dg = static_cast<std::size_t>(g.degree());
    std::vector<Integer> q(r.size() - dg, Integer(0));
    const Integer& lg = g.coeffs().back();
    for (std::size_t i = q.size(); i-- > 0;) {
        Integer& top = r[i + dg];
        if (top == 0) continue;
        if (!mpz_divisible_p(top.get_mpz_t(), lg.get_mpz_t())) return std::nullopt;
        Integer c;
        mpz_divexact(c.get_mpz_t(), top.get_mpz_t(), lg.get_mpz_t());
        for (std::size_t j = 0; j <= dg; ++j) r[i + j] -= c * g.coeffs()[j];
        q[i] = c;
    }
    for (std::size_t i = 0; i < dg; ++i)
        if (r[i] != 0) return std::nullopt;
    return IntPoly(std::move(q));
}

std::pair<IntPoly, IntPoly> pseudo_divmod(const IntPoly& f, const IntPoly& g) {
    if (g.is_zero()) throw std::invalid_argument("pseudo_divmod: division by zero");
    if (f.degree() < g.degree()) return {IntPoly{}, f};
    const std::size_t dg = static_cast<std::size_t>(g.degree());
    std::vector<Integer> r = f.coeffs();
    std::vector<Integer> q(r.size() - dg, Integer(0));
    const Integer& lg = g.coeffs().back();
    for (std::size_t i = q.size(); i-- > 0;) {
        // multiply everything so far by lg, then cancel the top coefficient
        for (auto& a : q) a *= lg;
        for (std::size_t j = 0; j <= i + dg; ++j) r[j] *= lg;
        const Integer c = r[i + dg] / lg;
        q[i] += c;
        for (std::size_t j = 0; j <= dg; ++j) r[i + j] -= c * g.coeffs()[j];
    }
    return {IntPoly(std::move(q)), IntPoly(std::move(r))};
}

bool divides_q(const IntPoly& g, const IntPoly& f) {
    if (g.is_zero()) return f.is_zero();
    if (f.is_zero()) return true;
    return divide_exact(f.primitive(), g.primitive()).has_value();
}

IntPoly quotient_q(const IntPoly& f, const IntPoly& g) {
    auto q = divide_exact(f.primitive(), g.primitive());
    if (!q) throw std::invalid_argument("quotient_q: divisor does not divide");
    return q->primitive();
}

IntPoly gcd(const IntPoly& f, const IntPoly& g) {
    if (f.is_zero()) return g.primitive();
    if (g.is_zero()) return f.primitive();
    IntPoly a = f.primitive(), b = g.primitive();
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
        IntPoly r = pseudo_divmod(a, b).second;
        a = std::move(b);
        b = r.primitive();
    }
    return a.primitive();
}

// ---------------------------------------------------------------- resultants

namespace {

// Fraction-free Gaussian elimination (Bareiss); destroys m.
Integer bareiss_det(std::vector<std::vector<Integer>>& m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    int sign = 1;
    Integer prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t piv = k + 1;
            while (piv < n && m[piv][k] == 0) ++piv;
            if (piv == n) return 0;
            std::swap(m[k], m[piv]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer v = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                m[i][j] = std::move(v);
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

}  // namespace

Integer resultant(const IntPoly& f, const IntPoly& g) {
    if (f.is_zero() || g.is_zero()) throw std::invalid_argument("resultant: zero polynomial");
    const std::size_t m = static_cast<std::size_t>(f.degree());
    const std::size_t n = static_cast<std::size_t>(g.degree());
    if (m == 0 && n == 0) return 1;
    if (m == 0) {
        Integer r;
        mpz_pow_ui(r.get_mpz_t(), f.lc().get_mpz_t(), n);
        return r;
    }
    if (n == 0) {
        Integer r;
        mpz_pow_ui(r.get_mpz_t(), g.lc().get_mpz_t(), m);
        return r;
    }
    const std::size_t size = m + n;
    std::vector<std::vector<Integer>> s(size, std::vector<Integer>(size, Integer(0)));
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t i = 0; i <= m; ++i) s[r][r + i] = f[m - i];
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t i = 0; i <= n; ++i) s[n + r][r + i] = g[n - i];
    return bareiss_det(s);
}

Integer discriminant(const IntPoly& f) {
    if (f.degree() < 1) throw std::invalid_argument("discriminant: degree must be >= 1");
    const long n = f.degree();
    Integer r = resultant(f, f.derivative());
    mpz_divexact(r.get_mpz_t(), r.get_mpz_t(), f.lc().get_mpz_t());
    if ((n * (n - 1) / 2) % 2 == 1) r = -r;
    return r;
}

// ---------------------------------------------------------------- square-free

bool is_squarefree(const IntPoly& f) {
    if (f.is_zero()) return false;
    if (f.degree() < 1) return true;
    return gcd(f, f.derivative()).degree() == 0;
}

std::vector<std::pair<IntPoly, unsigned>> squarefree_decomposition(const IntPoly& f) {
    if (f.is_zero()) throw std::invalid_argument("squarefree_decomposition: zero polynomial");
    std::vector<std::pair<IntPoly, unsigned>> out;
    IntPoly p = f.primitive();
    if (p.degree() < 1) return out;
    // Musser: w holds the product of factors of multiplicity >= i.
    IntPoly c = gcd(p, p.derivative());
    IntPoly w = quotient_q(p, c);
    unsigned i = 1;
    while (w.degree() > 0) {
        IntPoly y = gcd(w, c);
        IntPoly z = quotient_q(w, y);
        if (z.degree() > 0) out.emplace_back(z, i);
        ++i;
        w = y;
        c = quotient_q(c, y);
    }
    return out;
}

IntPoly lcm_sqfree(const IntPoly& a, const IntPoly& b) {
    if (!is_squarefree(a) || !is_squarefree(b)) throw NotSquarefree("lcm_sqfree: input is not square-free");
    const IntPoly h = gcd(a, b);
    return (quotient_q(a, h) * b.primitive()).primitive();
}

unsigned deg_irr(const IntPoly& f) {
    if (f.degree() < 1) return 0;
    unsigned best = 0;
    for (const auto& [g, e] : factor_q(f).factors) best = std::max(best, static_cast<unsigned>(g.degree()));
    return best;
}

// ---------------------------------------------------------------- RatFunc

RatFunc::RatFunc(const Rational& c) : scalar_(c), num_(IntPoly::constant(1)), den_(IntPoly::constant(1)) {}

RatFunc::RatFunc(const IntPoly& p) : RatFunc(Rational(1), p, IntPoly::constant(1)) {}

RatFunc::RatFunc(const Rational& scalar, const IntPoly& num, const IntPoly& den)
    : scalar_(scalar), num_(IntPoly::constant(1)), den_(IntPoly::constant(1)) {
    if (den.is_zero()) throw std::domain_error("RatFunc: zero denominator");
    if (scalar == 0 || num.is_zero()) {
        scalar_ = 0;
        return;
    }
    IntPoly n = num.primitive(), d = den.primitive();
    Integer cn = num.content(), cd = den.content();
    if (num.lc() < 0) cn = -cn;
    if (den.lc() < 0) cd = -cd;
    scalar_ = scalar * Rational(cn) / Rational(cd);
    scalar_.canonicalize();
    const IntPoly g = gcd(n, d);
    if (g.degree() > 0) {
        n = *divide_exact(n, g);
        d = *divide_exact(d, g);
    }
    num_ = std::move(n);
    den_ = std::move(d);
}

RatFunc RatFunc::t() { return RatFunc(IntPoly::t()); }

std::pair<IntPoly, Integer> RatFunc::as_poly() const {
    if (!is_polynomial()) throw std::domain_error("RatFunc::as_poly: not a polynomial");
    // den is a positive constant, which after normalization is 1
    return {num_ * scalar_.get_num(), scalar_.get_den()};
}

std::optional<Rational> RatFunc::eval(const Rational& v) const {
    if (is_zero()) return Rational(0);
    const Rational d = den_.eval(v);
    if (d == 0) return std::nullopt;
    Rational r = scalar_ * num_.eval(v) / d;
    r.canonicalize();
    return r;
}

std::optional<Rational> RatFunc::eval_at(const Integer& x, const Integer& y) const {
    if (is_zero()) return Rational(0);
    // s * N(y/x) / D(y/x) = s * Nh(x,y) x^(dD) / (Dh(x,y) x^(dN))
    const int dn = num_.degree(), dd = den_.degree();
    Integer nh = num_.eval_hom(x, y), dh = den_.eval_hom(x, y);
    if (x == 0) {
        if (dn > dd) return std::nullopt;
        if (dn < dd) return Rational(0);
        // equal degrees: ratio of leading coefficients
        Rational r = scalar_ * Rational(num_.lc(), den_.lc());
        r.canonicalize();
        return r;
    }
    Integer xp;
    if (dd >= dn) {
        mpz_pow_ui(xp.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(dd - dn));
        nh *= xp;
    } else {
        mpz_pow_ui(xp.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(dn - dd));
        dh *= xp;
    }
    if (dh == 0) return std::nullopt;
    Rational r(nh, dh);
    r.canonicalize();
    r *= scalar_;
    return r;
}

namespace {

int order_at(IntPoly f, const IntPoly& q) {
    int v = 0;
    while (f.degree() >= q.degree()) {
        auto d = divide_exact(f, q);
        if (!d) break;
        f = std::move(*d);
        ++v;
    }
    return v;
}

}  // namespace

std::optional<int> RatFunc::valuation(const IntPoly& q) const {
    if (is_zero()) return std::nullopt;
    const IntPoly pq = q.primitive();
    return order_at(num_, pq) - order_at(den_, pq);
}

std::optional<int> RatFunc::valuation_infinity() const {
    if (is_zero()) return std::nullopt;
    return den_.degree() - num_.degree();
}

RatFunc RatFunc::operator-() const {
    RatFunc r = *this;
    r.scalar_ = -r.scalar_;
    return r;
}

RatFunc RatFunc::inverse() const {
    if (is_zero()) throw std::domain_error("RatFunc: inverse of zero");
    RatFunc r = *this;
    r.scalar_ = 1 / scalar_;
    std::swap(r.num_, r.den_);
    return r;
}

RatFunc RatFunc::pow(int e) const {
    if (e < 0) return inverse().pow(-e);
    RatFunc r(1);
    if (e == 0) return r;
    Rational s;
    mpz_pow_ui(s.get_num_mpz_t(), scalar_.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(s.get_den_mpz_t(), scalar_.get_den_mpz_t(), static_cast<unsigned long>(e));
    // powers of coprime primitive polynomials stay coprime and primitive
    r.scalar_ = s;
    r.num_ = num_.pow(static_cast<unsigned>(e));
    r.den_ = den_.pow(static_cast<unsigned>(e));
    return r;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    const Integer& p1 = a.scalar_.get_num();
    const Integer& q1 = a.scalar_.get_den();
    const Integer& p2 = b.scalar_.get_num();
    const Integer& q2 = b.scalar_.get_den();
    if (a.den_ == b.den_) {
        IntPoly n = a.num_ * Integer(p1 * q2) + b.num_ * Integer(p2 * q1);
        if (n.is_zero()) return RatFunc();
        return RatFunc(Rational(1, 1) / Rational(q1 * q2), n, a.den_);
    }
    IntPoly n = a.num_ * b.den_ * Integer(p1 * q2) + b.num_ * a.den_ * Integer(p2 * q1);
    if (n.is_zero()) return RatFunc();
    return RatFunc(Rational(1) / Rational(q1 * q2), n, a.den_ * b.den_);
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero() || b.is_zero()) return RatFunc();
    return RatFunc(a.scalar_ * b.scalar_, a.num_ * b.num_, a.den_ * b.den_);
}

// ---------------------------------------------------------------- HomPoly

HomPoly::HomPoly(unsigned degree, std::vector<Integer> coeffs) : deg_(degree), c_(std::move(coeffs)) {
    if (c_.size() != deg_ + 1u) throw std::invalid_argument("HomPoly: need degree + 1 coefficients");
}

HomPoly HomPoly::constant(const Integer& c) { return HomPoly(0, {c}); }
HomPoly HomPoly::x() { return HomPoly(1, {Integer(0), Integer(1)}); }
HomPoly HomPoly::y() { return HomPoly(1, {Integer(1), Integer(0)}); }

HomPoly HomPoly::from_t(const IntPoly& q, unsigned n) {
    // x^n q(y/x) = sum q_k y^k x^(n-k), i.e. coefficient of x^(n-k) is q_k
    const IntPoly r = q.reversed(n);
    std::vector<Integer> c(n + 1, Integer(0));
    for (unsigned i = 0; i <= n; ++i) c[i] = r[i];
    return HomPoly(n, std::move(c));
}

bool HomPoly::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Integer& a) { return a == 0; });
}

IntPoly HomPoly::at_x1() const {
    std::vector<Integer> v(c_.rbegin(), c_.rend());
    return IntPoly(std::move(v));
}

IntPoly HomPoly::at_y1() const { return IntPoly(c_); }

Integer HomPoly::eval(const Integer& x, const Integer& y) const {
    Integer r = 0;
    for (unsigned i = deg_ + 1; i-- > 0;) r = r * x + c_[i] * [&] {
        Integer yp;
        mpz_pow_ui(yp.get_mpz_t(), y.get_mpz_t(), deg_ - i);
        return yp;
    }();
    return r;
}

Integer HomPoly::content() const {
    Integer g = 0;
    for (const auto& a : c_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.get_mpz_t());
    return g;
}

HomPoly HomPoly::normalized() const {
    if (is_zero()) return *this;
    Integer g = content();
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        if (*it != 0) {
            if (*it < 0) g = -g;
            break;
        }
    }
    HomPoly r = *this;
    for (auto& a : r.c_) mpz_divexact(a.get_mpz_t(), a.get_mpz_t(), g.get_mpz_t());
    return r;
}

HomPoly operator*(const HomPoly& a, const HomPoly& b) {
    std::vector<Integer> v(a.deg_ + b.deg_ + 1, Integer(0));
    for (unsigned i = 0; i <= a.deg_; ++i) {
        if (a.c_[i] == 0) continue;
        for (unsigned j = 0; j <= b.deg_; ++j) v[i + j] += a.c_[i] * b.c_[j];
    }
    return HomPoly(a.deg_ + b.deg_, std::move(v));
}

HomPoly operator+(const HomPoly& a, const HomPoly& b) {
    if (a.deg_ != b.deg_) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        throw std::invalid_argument("HomPoly: adding forms of different degrees");
    }
    HomPoly r = a;
    for (unsigned i = 0; i <= a.deg_; ++i) r.c_[i] += b.c_[i];
    return r;
}

HomPoly HomPoly::pow(unsigned e) const {
    HomPoly r = constant(1), b = *this;
    while (e) {
        if (e & 1) r = r * b;
        e >>= 1;
        if (e) b = b * b;
    }
    return r;
}

HomPoly HomPoly::scaled(const Integer& k) const {
    HomPoly r = *this;
    for (auto& a : r.c_) a *= k;
    return r;
}

bool operator<(const HomPoly& a, const HomPoly& b) {
    if (a.deg_ != b.deg_) return a.deg_ < b.deg_;
    for (unsigned i = a.deg_ + 1; i-- > 0;)
        if (a.c_[i] != b.c_[i]) return a.c_[i] < b.c_[i];
    return false;
}

HomPoly homogenize_place(const IntPoly& q) {
    if (q.degree() < 1) throw std::invalid_argument("homogenize_place: constant polynomial");
    return HomPoly::from_t(q, static_cast<unsigned>(q.degree()));
}

HomPoly deg_place() { return HomPoly::x(); }

Integer discriminant_hom(const HomPoly& f) {
    Integer out = 1;
    bool any = false;
    for (const IntPoly& g : {f.at_y1(), f.at_x1()}) {
        if (g.degree() < 1) continue;
        const Integer r = resultant(g, g.derivative());
        if (!any) {
            out = abs(r);
            any = true;
        } else {
            mpz_lcm(out.get_mpz_t(), out.get_mpz_t(), r.get_mpz_t());
        }
    }
    return out;
}

bool divides_hom(const HomPoly& a, const HomPoly& b) {
    if (a.is_zero()) return b.is_zero();
    if (b.is_zero()) return true;
    if (a.degree() > b.degree()) return false;
    // Compare through P(x, 1), keeping track of the y-adic part via degrees:
    // a | b iff a(x,1) | b(x,1) in Q[x] and the y-power of a does not exceed b's.
    const IntPoly ax = a.at_y1(), bx = b.at_y1();
    const unsigned ya = a.degree() - static_cast<unsigned>(ax.degree());
    const unsigned yb = b.degree() - static_cast<unsigned>(bx.degree());
    return ya <= yb && divides_q(ax, bx);
}

bool equal_up_to_unit(const HomPoly& a, const HomPoly& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    return a.normalized() == b.normalized();
}

HomFactorList factor_hom(const HomPoly& f, unsigned degree_bound) {
    if (f.is_zero()) throw std::invalid_argument("factor_hom: zero form");
    HomFactorList out;
    const IntPoly q = f.at_x1();
    const unsigned xpow = f.degree() - static_cast<unsigned>(q.degree());
    FactorList fl = factor_q(q, degree_bound);
    out.content = fl.content;
    for (const auto& [g, e] : fl.factors) {
        HomPoly h = homogenize_place(g);
        HomPoly n = h.normalized();
        if (n.coeffs() != h.coeffs() && e % 2 == 1) out.content = -out.content;
        out.factors.emplace_back(std::move(n), e);
    }
    if (xpow > 0) out.factors.emplace_back(HomPoly::x(), xpow);
    std::sort(out.factors.begin(), out.factors.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

bool is_squarefree_hom(const HomPoly& f) {
    if (f.is_zero()) return false;
    const IntPoly q = f.at_x1();
    return f.degree() - static_cast<unsigned>(q.degree()) <= 1 && is_squarefree(q);
}

unsigned deg_irr(const HomPoly& f) {
    unsigned best = 0;
    for (const auto& [g, e] : factor_hom(f).factors) best = std::max(best, g.degree());
    return best;
}

// ---------------------------------------------------------------- BiPoly

BiPoly BiPoly::from_form(const HomPoly& f) {
    BiPoly b;
    for (unsigned i = 0; i <= f.degree(); ++i)
        if (f.coeff(i) != 0) b.terms[{i, f.degree() - i}] = f.coeff(i);
    return b;
}

BiPoly BiPoly::from_x(const IntPoly& f) {
    BiPoly b;
    for (std::size_t i = 0; i < f.coeffs().size(); ++i)
        if (f[i] != 0) b.terms[{static_cast<unsigned>(i), 0u}] = f[i];
    return b;
}

Integer BiPoly::eval(const Integer& x, const Integer& y) const {
    Integer r = 0, xp, yp;
    for (const auto& [e, c] : terms) {
        mpz_pow_ui(xp.get_mpz_t(), x.get_mpz_t(), e.first);
        mpz_pow_ui(yp.get_mpz_t(), y.get_mpz_t(), e.second);
        r += c * xp * yp;
    }
    return r;
}

unsigned BiPoly::total_degree() const {
    unsigned d = 0;
    for (const auto& [e, c] : terms) d = std::max(d, e.first + e.second);
    return d;
}

bool BiPoly::is_homogeneous() const {
    if (terms.empty()) return true;
    const unsigned d = terms.begin()->first.first + terms.begin()->first.second;
    return std::all_of(terms.begin(), terms.end(),
                       [d](const auto& kv) { return kv.first.first + kv.first.second == d; });
}

bool BiPoly::depends_on_x() const {
    return std::any_of(terms.begin(), terms.end(), [](const auto& kv) { return kv.first.first > 0; });
}

bool BiPoly::depends_on_y() const {
    return std::any_of(terms.begin(), terms.end(), [](const auto& kv) { return kv.first.second > 0; });
}

HomPoly BiPoly::to_form() const {
    if (!is_homogeneous()) throw std::invalid_argument("polynomial is not homogeneous");
    if (terms.empty()) return HomPoly();
    const unsigned d = total_degree();
    std::vector<Integer> c(d + 1, Integer(0));
    for (const auto& [e, v] : terms) c[e.first] = v;
    return HomPoly(d, std::move(c));
}

IntPoly BiPoly::in_x() const {
    if (depends_on_y()) throw std::invalid_argument("polynomial depends on y");
    std::vector<Integer> c(total_degree() + 1, Integer(0));
    for (const auto& [e, v] : terms) c[e.first] = v;
    return IntPoly(std::move(c));
}

}  // namespace rootnum
