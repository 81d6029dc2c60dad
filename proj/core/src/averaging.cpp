#include "rootnum/averaging.hpp"

#include "rootnum/errors.hpp"
#include "shard.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace rootnum {

namespace {

using i64 = std::int64_t;
using i128 = __int128;

i64 mod_floor(i64 a, i64 m) {
    i64 r = a % m;
    return r < 0 ? r + m : r;
}

i64 gcd64(i64 a, i64 b) { return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b); }

void add_sample(AverageReport& r, const Sample& s) {
    ++r.enumerated;
    switch (s.status) {
        case SampleStatus::Ok:
            r.sum += s.value;
            ++r.count;
            break;
        case SampleStatus::Singular:
            r.sum += 1;
            ++r.count;
            ++r.skipped.singular;
            break;
        case SampleStatus::Undetermined: ++r.skipped.undetermined; break;
        case SampleStatus::Incomplete: ++r.skipped.incomplete; break;
    }
}

// f(s) f(t) with the singular convention applied to each factor.
Sample product(const Sample& s, const Sample& t) {
    if (s.status == SampleStatus::Incomplete || t.status == SampleStatus::Incomplete)
        return {0, SampleStatus::Incomplete};
    if (s.status == SampleStatus::Undetermined || t.status == SampleStatus::Undetermined)
        return {0, SampleStatus::Undetermined};
    const long a = s.status == SampleStatus::Singular ? 1 : s.value;
    const long b = t.status == SampleStatus::Singular ? 1 : t.value;
    // the product of a singular fiber with anything is an ordinary sample
    return {a * b, SampleStatus::Ok};
}

i64 first_in_progression(i64 a, i64 m) {
    i64 n0 = mod_floor(a, m);
    if (n0 < 1) n0 += m;
    return n0;
}

std::string progression_label(i64 a, i64 m, i64 N) {
    std::ostringstream o;
    o << "n = " << mod_floor(a, m) << " mod " << m << ", 1 <= n <= " << N;
    return o.str();
}

std::string pair_label(const Sector& S, const LatticeCoset& L, i64 N, bool coprime) {
    std::ostringstream o;
    o << (coprime ? "coprime " : "") << "(x, y) in [-" << N << ", " << N << "]^2, sector " << S.describe()
      << ", lattice " << L.describe();
    return o.str();
}

// ------------------------------------------------------------ arithmetic

constexpr std::uint32_t kTableSize = 1u << 22;

const std::vector<std::int8_t>& lambda_table() {
    static const std::vector<std::int8_t> t = liouville_table(kTableSize);
    return t;
}

const std::vector<std::int8_t>& mu_table() {
    static const std::vector<std::int8_t> t = moebius_table(kTableSize);
    return t;
}

std::uint64_t magnitude(i128 v) { return static_cast<std::uint64_t>(v < 0 ? -v : v); }

bool fits(i128 v) {
    const i128 lim = static_cast<i128>(~0ull);
    return v <= lim && v >= -lim;
}

// fn(v) for a 64-bit magnitude.
int arith_small(ArithFunction fn, std::uint64_t v) {
    if (v == 0) return 0;
    if (v <= kTableSize) return fn == ArithFunction::Liouville ? lambda_table()[v] : mu_table()[v];
    return fn == ArithFunction::Liouville ? liouville_u64(v) : moebius_u64(v);
}

// fn(v) for a big value; nothing when factorization runs out of budget.
std::optional<int> arith_big(ArithFunction fn, const Integer& v, const FactorBudget& budget) {
    if (v == 0) return 0;
    for (const FactorBudget& b : {budget, budget.scaled(8)}) {
        const Factorization f = factorize(v, b);
        if (!f.complete) continue;
        unsigned omega = 0;
        bool square = false;
        for (const auto& pp : f.factors) {
            omega += pp.exponent;
            square = square || pp.exponent > 1;
        }
        if (fn == ArithFunction::Moebius && square) return 0;
        return (omega & 1) ? -1 : 1;
    }
    return std::nullopt;
}

// A bivariate polynomial evaluated in 128-bit arithmetic when it fits.
struct FastPoly {
    struct Term {
        unsigned i, j;
        Integer c;
        i64 c64;
        bool small;
    };
    std::vector<Term> terms;
    BiPoly exact;

    explicit FastPoly(const BiPoly& p) : exact(p) {
        for (const auto& [ij, c] : p.terms) terms.push_back({ij.first, ij.second, c, c.fits_slong_p() ? c.get_si() : 0, c.fits_slong_p() != 0});
    }

    static bool pow_into(i128 base, unsigned e, i128& out) {
        i128 r = 1;
        for (unsigned k = 0; k < e; ++k)
            if (__builtin_mul_overflow(r, base, &r)) return false;
        out = r;
        return true;
    }

    // Returns false when 128 bits might not suffice.
    bool eval(i64 x, i64 y, i128& out) const {
        i128 acc = 0;
        for (const auto& t : terms) {
            if (!t.small) return false;
            i128 px, py, m;
            if (!pow_into(x, t.i, px) || !pow_into(y, t.j, py)) return false;
            if (__builtin_mul_overflow(px, py, &m)) return false;
            if (__builtin_mul_overflow(m, static_cast<i128>(t.c64), &m)) return false;
            if (__builtin_add_overflow(acc, m, &acc)) return false;
        }
        out = acc;
        return true;
    }

    Integer eval_big(i64 x, i64 y) const { return exact.eval(Integer(static_cast<long>(x)), Integer(static_cast<long>(y))); }
};

// fn(P(x, y)), with lambda split over the factors of P when P is a form.
class PolyArith {
public:
    PolyArith(const BiPoly& P, ArithFunction fn, const FactorBudget& budget) : fn_(fn), budget_(budget), whole_(P) {
        if (fn == ArithFunction::Liouville && P.is_homogeneous() && P.total_degree() > 0) {
            const HomFactorList fl = factor_hom(P.to_form());
            content_lambda_ = liouville(fl.content, budget);
            for (const auto& [q, e] : fl.factors) factors_.push_back({FastPoly(BiPoly::from_form(q)), e});
            split_ = true;
        }
    }

    // |P(x, y)| <= bound test, in 128 bits when possible.
    bool within(i64 x, i64 y, const Integer& bound) const {
        i128 v;
        if (whole_.eval(x, y, v) && fits(v) && bound.fits_ulong_p()) return magnitude(v) <= bound.get_ui();
        return abs(whole_.eval_big(x, y)) <= bound;
    }

    Sample operator()(i64 x, i64 y) const {
        if (!split_) return value_of(whole_, x, y);
        long r = content_lambda_;
        for (const auto& [f, e] : factors_) {
            const Sample s = value_of(f, x, y);
            if (s.status != SampleStatus::Ok) return s;
            if (s.value == 0) return {0, SampleStatus::Ok};
            if (e & 1) r *= s.value;
        }
        return {r, SampleStatus::Ok};
    }

private:
    Sample value_of(const FastPoly& p, i64 x, i64 y) const {
        i128 v;
        if (p.eval(x, y, v) && fits(v)) return {arith_small(fn_, magnitude(v)), SampleStatus::Ok};
        if (auto r = arith_big(fn_, p.eval_big(x, y), budget_)) return {*r, SampleStatus::Ok};
        return {0, SampleStatus::Incomplete};
    }

    ArithFunction fn_;
    FactorBudget budget_;
    FastPoly whole_;
    bool split_ = false;
    long content_lambda_ = 1;
    std::vector<std::pair<FastPoly, unsigned>> factors_;
};

}  // namespace

// ------------------------------------------------------------ lattice

LatticeCoset::LatticeCoset(std::array<i64, 2> u, std::array<i64, 2> v, std::array<i64, 2> offset) {
    // row reduction to upper triangular form
    while (v[0] != 0) {
        const i64 q = u[0] / v[0];
        u[0] -= q * v[0];
        u[1] -= q * v[1];
        std::swap(u, v);
    }
    if (u[0] == 0 || v[1] == 0) throw std::invalid_argument("LatticeCoset: basis is degenerate");
    if (u[0] < 0) u = {-u[0], -u[1]};
    a_ = u[0];
    d_ = v[1] < 0 ? -v[1] : v[1];
    b_ = mod_floor(u[1], d_);
    const i64 ox = mod_floor(offset[0], a_);
    const i64 k = (offset[0] - ox) / a_;
    ox_ = ox;
    oy_ = mod_floor(offset[1] - k * b_, d_);
}

bool LatticeCoset::contains(i64 x, i64 y) const {
    const i128 u = static_cast<i128>(x) - ox_, v = static_cast<i128>(y) - oy_;
    if (u % a_ != 0) return false;
    return (v - static_cast<i128>(b_) * (u / a_)) % d_ == 0;
}

std::string LatticeCoset::describe() const {
    std::ostringstream o;
    if (index() == 1) return "Z^2";
    o << "(" << ox_ << ", " << oy_ << ") + <(" << a_ << ", " << b_ << "), (0, " << d_ << ")>";
    return o.str();
}

// ------------------------------------------------------------ sector

namespace {

using Vec = std::array<i64, 2>;

i128 cross(const Vec& a, const Vec& b) { return static_cast<i128>(a[0]) * b[1] - static_cast<i128>(a[1]) * b[0]; }
i128 dot(const Vec& a, const Vec& b) { return static_cast<i128>(a[0]) * b[0] + static_cast<i128>(a[1]) * b[1]; }

// 0 for angles in [0, pi) measured from `base`, 1 for [pi, 2 pi).
int half(const Vec& base, const Vec& p) {
    const i128 c = cross(base, p);
    return (c > 0 || (c == 0 && dot(base, p) > 0)) ? 0 : 1;
}

bool on_base_ray(const Vec& base, const Vec& p) { return cross(base, p) == 0 && dot(base, p) > 0; }

// Strict angular order counterclockwise from `base`: -1, 0 or 1.
int angle_cmp(const Vec& base, const Vec& p, const Vec& q) {
    const int hp = half(base, p), hq = half(base, q);
    if (hp != hq) return hp < hq ? -1 : 1;
    const i128 c = cross(p, q);
    return c > 0 ? -1 : (c < 0 ? 1 : 0);
}

}  // namespace

Sector::Sector(std::vector<Interval> parts) : full_(false), parts_(std::move(parts)) {
    if (parts_.empty()) throw std::invalid_argument("Sector: no intervals");
    for (const auto& iv : parts_)
        if ((iv.from[0] == 0 && iv.from[1] == 0) || (iv.to[0] == 0 && iv.to[1] == 0))
            throw std::invalid_argument("Sector: zero direction vector");
}

Sector Sector::full() { return Sector(); }

Sector Sector::quadrant(int sx, int sy) {
    if (sx == 0 || sy == 0) throw std::invalid_argument("Sector::quadrant: signs must be nonzero");
    const i64 x = sx > 0 ? 1 : -1, y = sy > 0 ? 1 : -1;
    // counterclockwise order through the quadrant
    const bool x_first = (x > 0) == (y > 0);
    Interval iv;
    iv.from = x_first ? Vec{x, 0} : Vec{0, y};
    iv.to = x_first ? Vec{0, y} : Vec{x, 0};
    iv.closed_from = iv.closed_to = false;
    return Sector({iv});
}

Sector Sector::off_axes() {
    std::vector<Interval> parts;
    for (auto [sx, sy] : {std::pair{1, 1}, {-1, 1}, {-1, -1}, {1, -1}})
        parts.push_back(quadrant(sx, sy).parts_.front());
    return Sector(std::move(parts));
}

Sector Sector::parse(const std::string& name) {
    if (name == "all" || name.empty()) return full();
    if (name == "off-axes") return off_axes();
    if (name.size() == 2 && (name[0] == '+' || name[0] == '-') && (name[1] == '+' || name[1] == '-'))
        return quadrant(name[0] == '+' ? 1 : -1, name[1] == '+' ? 1 : -1);
    throw std::invalid_argument("unknown sector '" + name + "'");
}

bool Sector::contains(i64 x, i64 y) const {
    if (x == 0 && y == 0) return false;
    if (full_) return true;
    const Vec p{x, y};
    for (const auto& iv : parts_) {
        if (on_base_ray(iv.from, p)) {
            if (iv.closed_from || (on_base_ray(iv.from, iv.to) && iv.closed_to)) return true;
            continue;
        }
        if (on_base_ray(iv.from, iv.to)) return true;  // whole turn
        const int c = angle_cmp(iv.from, p, iv.to);
        if (c < 0 || (c == 0 && iv.closed_to)) return true;
    }
    return false;
}

std::string Sector::describe() const {
    if (full_) return "all";
    std::ostringstream o;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        const auto& iv = parts_[i];
        if (i) o << " u ";
        o << (iv.closed_from ? '[' : '(') << "(" << iv.from[0] << "," << iv.from[1] << ") -> (" << iv.to[0] << ","
          << iv.to[1] << ")" << (iv.closed_to ? ']' : ')');
    }
    return o.str();
}

// ------------------------------------------------------------ reports

Rational AverageReport::value() const {
    if (count == 0) return 0;
    Rational v(sum, Integer(static_cast<unsigned long>(count)));
    v.canonicalize();
    return v;
}

void AverageReport::merge(const AverageReport& o) {
    sum += o.sum;
    count += o.count;
    enumerated += o.enumerated;
    skipped.singular += o.skipped.singular;
    skipped.undetermined += o.skipped.undetermined;
    skipped.incomplete += o.skipped.incomplete;
    if (domain.empty()) domain = o.domain;
}

AverageReport run_sharded(i64 lo, i64 hi, unsigned jobs, const std::function<AverageReport(i64, i64)>& work) {
    return detail::shard<AverageReport>(lo, hi, jobs, work,
                                        [](AverageReport& acc, const AverageReport& part) { acc.merge(part); });
}

// ------------------------------------------------------------ progressions

namespace {

template <class Fn>
AverageReport progression_sweep(i64 a, i64 m, i64 N, unsigned jobs, Fn&& one) {
    if (m < 1) throw std::invalid_argument("progression modulus must be positive");
    const i64 n0 = first_in_progression(a, m);
    const i64 terms = N >= n0 ? (N - n0) / m + 1 : 0;
    AverageReport r = run_sharded(0, terms - 1, jobs, [&](i64 lo, i64 hi) {
        AverageReport part;
        for (i64 i = lo; i <= hi; ++i) add_sample(part, one(n0 + i * m));
        return part;
    });
    r.domain = progression_label(a, m, N);
    return r;
}

template <class Fn>
AverageReport pair_sweep(const Sector& S, const LatticeCoset& L, i64 x_lo, i64 x_hi, i64 y_lo, i64 y_hi,
                         bool coprime, unsigned jobs, Fn&& one) {
    return run_sharded(x_lo, x_hi, jobs, [&](i64 lo, i64 hi) {
        AverageReport part;
        for (i64 x = lo; x <= hi; ++x)
            for (i64 y = y_lo; y <= y_hi; ++y) {
                if (coprime ? gcd64(x, y) != 1 : (x == 0 && y == 0)) continue;
                if (!S.contains(x, y) || !L.contains(x, y)) continue;
                if (auto s = one(x, y)) add_sample(part, *s);
            }
        return part;
    });
}

}  // namespace

AverageReport av_progression(const IntSampler& f, i64 a, i64 m, i64 N, unsigned jobs) {
    return progression_sweep(a, m, N, jobs, [&](i64 n) { return f(n); });
}

AverageReport autocov_progression(const IntSampler& f, i64 a, i64 m, i64 k, i64 N, unsigned jobs) {
    if (k == 0) throw std::invalid_argument("autocov_progression: shift must be nonzero");
    AverageReport r = progression_sweep(a, m, N, jobs, [&](i64 n) { return product(f(n), f(n + k)); });
    r.domain += ", shift " + std::to_string(k);
    return r;
}

AverageReport av_rational(const PairSampler& f, const Sector& S, const LatticeCoset& L, i64 N, unsigned jobs) {
    if (N < 1) throw std::invalid_argument("av_rational: N must be positive");
    AverageReport r = pair_sweep(S, L, -N, N, -N, N, true, jobs,
                                 [&](i64 x, i64 y) { return std::optional<Sample>(f(x, y)); });
    r.domain = pair_label(S, L, N, true);
    return r;
}

AverageReport autocorr_rational(const PairSampler& f, const Sector& S, const LatticeCoset& L, const Rational& t0,
                                i64 N, unsigned jobs) {
    if (t0 == 0) throw std::invalid_argument("autocorr_rational: shift must be nonzero");
    Rational t = t0;
    t.canonicalize();
    if (!t.get_num().fits_slong_p() || !t.get_den().fits_slong_p())
        throw std::invalid_argument("autocorr_rational: shift too large");
    const i64 p = t.get_num().get_si(), q = t.get_den().get_si();
    AverageReport r = pair_sweep(S, L, -N, N, -N, N, true, jobs, [&](i64 x, i64 y) {
        // y/x + p/q = (y q + p x) / (x q)
        i64 X = 0, Y = 1;
        if (x != 0) {
            X = x * q;
            Y = y * q + p * x;
            const i64 g = gcd64(X, Y);
            X /= g;
            Y /= g;
        }
        return std::optional<Sample>(product(f(x, y), f(X, Y)));
    });
    r.domain = pair_label(S, L, N, true) + ", shift " + to_string(t);
    return r;
}

// ------------------------------------------------------------ samplers

PairSampler root_number_sampler(const EllipticSurface& s, const OracleTable* oracle, const FactorBudget& budget) {
    validate(s);
    const PrimeCover cover = prime_cover(s);
    return [s, cover, oracle, budget](i64 x, i64 y) -> Sample {
        const Integer X(static_cast<long>(x)), Y(static_cast<long>(y));
        const auto f = specialize(s, X, Y);
        if (!f) return {1, SampleStatus::Singular};
        // 2 and 3 first: without table data there is no point factoring
        for (unsigned p : {2u, 3u})
            if (local_datum(*f, Integer(p), oracle).w == kUndetermined) return {0, SampleStatus::Undetermined};
        for (const FactorBudget& b : {budget, budget.scaled(8)}) {
            try {
                const FiberReport r = global_root_number_over(*f, cover_primes(cover, X, Y, b), oracle);
                if (r.global == kUndetermined) return {0, SampleStatus::Undetermined};
                return {r.global, SampleStatus::Ok};
            } catch (const FactorizationIncomplete&) {
            }
        }
        return {0, SampleStatus::Incomplete};
    };
}

IntSampler root_number_sampler_int(const EllipticSurface& s, const OracleTable* oracle, const FactorBudget& budget) {
    PairSampler f = root_number_sampler(s, oracle, budget);
    return [f](i64 n) { return f(1, n); };
}

IntSampler liouville_sampler() {
    return [](i64 n) -> Sample { return {arith_small(ArithFunction::Liouville, magnitude(n)), SampleStatus::Ok}; };
}

IntSampler moebius_sampler() {
    return [](i64 n) -> Sample { return {arith_small(ArithFunction::Moebius, magnitude(n)), SampleStatus::Ok}; };
}

std::string to_string(ArithFunction f) { return f == ArithFunction::Liouville ? "liouville" : "moebius"; }

// ------------------------------------------------------------ polynomial sweeps

AverageReport sweep_poly(const BiPoly& P, ArithFunction fn, const BoxDomain& dom, unsigned jobs,
                         const FactorBudget& budget) {
    if (P.is_zero()) throw std::invalid_argument("sweep_poly: zero polynomial");
    const PolyArith eval(P, fn, budget);
    const bool bounded = dom.value_bound > 0;
    AverageReport r = pair_sweep(dom.sector, dom.lattice, dom.x_lo, dom.x_hi, dom.y_lo, dom.y_hi, dom.coprime, jobs,
                                 [&](i64 x, i64 y) -> std::optional<Sample> {
                                     if (bounded && !eval.within(x, y, dom.value_bound)) return std::nullopt;
                                     return eval(x, y);
                                 });
    std::ostringstream o;
    o << to_string(fn) << " over " << (dom.coprime ? "coprime " : "") << "(x, y) in [" << dom.x_lo << ", "
      << dom.x_hi << "] x [" << dom.y_lo << ", " << dom.y_hi << "], sector " << dom.sector.describe() << ", lattice "
      << dom.lattice.describe();
    if (bounded) o << ", |P| <= " << dom.value_bound.get_str();
    r.domain = o.str();
    return r;
}

AverageReport sweep_lambda_poly(const IntPoly& P, i64 a, i64 m, i64 N, unsigned jobs, const FactorBudget& budget) {
    if (P.degree() < 0) throw std::invalid_argument("sweep_lambda_poly: zero polynomial");
    const FactorList fl = factor_q(P);
    std::vector<std::pair<PolyArith, unsigned>> parts;
    for (const auto& [q, e] : fl.factors) parts.emplace_back(PolyArith(BiPoly::from_x(q), ArithFunction::Liouville, budget), e);
    const long content = liouville(fl.content, budget);
    AverageReport r = progression_sweep(a, m, N, jobs, [&](i64 n) -> Sample {
        long v = content;
        for (const auto& [f, e] : parts) {
            const Sample s = f(n, 0);
            if (s.status != SampleStatus::Ok) return s;
            if (s.value == 0) return {0, SampleStatus::Ok};
            if (e & 1) v *= s.value;
        }
        return {v, SampleStatus::Ok};
    });
    return r;
}

AverageReport sweep_lambda_poly(const BiPoly& P, const Sector& S, const LatticeCoset& L, i64 N, bool coprime,
                                unsigned jobs, const FactorBudget& budget) {
    BoxDomain dom;
    dom.x_lo = dom.y_lo = -N;
    dom.x_hi = dom.y_hi = N;
    dom.sector = S;
    dom.lattice = L;
    dom.coprime = coprime;
    return sweep_poly(P, ArithFunction::Liouville, dom, jobs, budget);
}

}  // namespace rootnum
