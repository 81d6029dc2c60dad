#include "rootnum/fiber.hpp"

#include "rootnum/errors.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

namespace rootnum {

namespace {

int floor_div(int a, int b) {
    int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

int val_or_inf(const Rational& q, const Integer& p) { return q == 0 ? kInfinite : valuation(q, p); }

Rational scale_pow(const Rational& q, const Integer& p, int e) {
    // q * p^e
    if (q == 0 || e == 0) return q;
    Integer pe;
    mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(std::abs(e)));
    Rational r = e > 0 ? Rational(q * Rational(pe)) : Rational(q / Rational(pe));
    r.canonicalize();
    return r;
}

// Residue of a p-integral rational modulo m (m a power of p).
Integer residue(const Rational& q, const Integer& m) {
    Integer inv;
    if (!mpz_invert(inv.get_mpz_t(), q.get_den_mpz_t(), m.get_mpz_t()))
        throw std::logic_error("residue: denominator not invertible");
    Integer r = q.get_num() * inv;
    mpz_fdiv_r(r.get_mpz_t(), r.get_mpz_t(), m.get_mpz_t());
    return r;
}

// Kronecker symbol (u / p) of a p-adic unit rational u.
int kron_unit(const Rational& u, const Integer& p) { return kronecker(u.get_num() * u.get_den(), p); }

int sign_of_kron(long a, const Integer& p) { return kronecker(Integer(a), p); }

}  // namespace

FiberCurve curve_from_invariants(const Rational& c4, const Rational& c6) {
    FiberCurve f;
    f.c4 = c4;
    f.c6 = c6;
    f.delta = (c4 * c4 * c4 - c6 * c6) / 1728;
    f.delta.canonicalize();
    if (f.delta == 0) throw NotASurface("curve_from_invariants: singular curve");
    return f;
}

FiberCurve curve_from_ainvariants(const Integer& a1, const Integer& a2, const Integer& a3, const Integer& a4,
                                  const Integer& a6) {
    const Integer b2 = a1 * a1 + 4 * a2;
    const Integer b4 = 2 * a4 + a1 * a3;
    const Integer b6 = a3 * a3 + 4 * a6;
    const Integer c4 = b2 * b2 - 24 * b4;
    const Integer c6 = -b2 * b2 * b2 + 36 * b2 * b4 - 216 * b6;
    return curve_from_invariants(Rational(c4), Rational(c6));
}

std::optional<FiberCurve> specialize(const EllipticSurface& s, const Integer& x, const Integer& y) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
    if (g != 1) throw NotCoprime("specialize: (x, y) must be coprime");
    auto c4 = s.c4.eval_at(x, y);
    auto c6 = s.c6.eval_at(x, y);
    if (!c4 || !c6) return std::nullopt;
    Rational d = (*c4 * *c4 * *c4 - *c6 * *c6) / 1728;
    d.canonicalize();
    if (d == 0) return std::nullopt;
    FiberCurve f;
    f.c4 = *c4;
    f.c6 = *c6;
    f.delta = d;
    f.x = x;
    f.y = y;
    return f;
}

std::optional<FiberCurve> specialize_at(const EllipticSurface& s, const Rational& t) {
    Rational c = t;
    c.canonicalize();
    return specialize(s, c.get_den(), c.get_num());
}

std::string to_string(LocalClass k) {
    switch (k) {
        case LocalClass::Good: return "good";
        case LocalClass::MultSplit: return "split-multiplicative";
        case LocalClass::MultNonSplit: return "nonsplit-multiplicative";
        case LocalClass::AddPotMult: return "additive-potentially-multiplicative";
        case LocalClass::AddPotGood: return "additive-potentially-good";
    }
    return "?";
}

MinimalData minimalize_at(const Rational& c4, const Rational& c6, const Rational& delta, const Integer& p) {
    if (delta == 0) throw std::invalid_argument("minimalize_at: zero discriminant");
    MinimalData m;
    const int v4 = val_or_inf(c4, p), v6 = val_or_inf(c6, p), vD = valuation(delta, p);
    m.k = floor_div(vD, 12);
    if (v4 != kInfinite) m.k = std::min(m.k, floor_div(v4, 4));
    if (v6 != kInfinite) m.k = std::min(m.k, floor_div(v6, 6));
    m.v4 = v4 == kInfinite ? kInfinite : v4 - 4 * m.k;
    m.v6 = v6 == kInfinite ? kInfinite : v6 - 6 * m.k;
    m.vD = vD - 12 * m.k;
    return m;
}

bool kraus_integral(const Rational& c4, const Rational& c6, const Rational& delta, unsigned p) {
    const Integer P(p);
    if (c4 != 0 && valuation(c4, P) < 0) return false;
    if (c6 != 0 && valuation(c6, P) < 0) return false;
    if (valuation(delta, P) < 0) return false;
    if (p == 3) return c6 == 0 || valuation(c6, P) != 2;
    if (p == 2) {
        if (c6 != 0 && valuation(c6, P) == 0 && residue(c6, Integer(4)) == 3) return true;
        const bool c4_ok = c4 == 0 || valuation(c4, P) >= 4;
        const Integer r = c6 == 0 ? Integer(0) : residue(c6, Integer(32));
        return c4_ok && (r == 0 || r == 8);
    }
    return true;
}

unsigned oracle_modulus_exponent(unsigned p) {
    if (p == 2) return 6;
    if (p == 3) return 4;
    throw std::invalid_argument("oracle table covers p = 2, 3 only");
}

// ---------------------------------------------------------------- table

OracleTable OracleTable::parse(std::istream& in) {
    OracleTable t;
    std::string line;
    std::size_t lineno = 0;
    auto parse_val = [&](const std::string& tok) -> int {
        if (tok == "inf") return kInfinite;
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(tok, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != tok.size() || v < 0)
            throw MalformedTable("line " + std::to_string(lineno) + ": bad valuation '" + tok + "'");
        return v;
    };
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::vector<std::string> tok;
        for (std::string w; ls >> w;) tok.push_back(w);
        if (tok.empty()) continue;
        if (tok.size() != 7)
            throw MalformedTable("line " + std::to_string(lineno) + ": expected 7 fields, got " +
                                 std::to_string(tok.size()));
        OracleKey k;
        if (tok[0] != "2" && tok[0] != "3")
            throw MalformedTable("line " + std::to_string(lineno) + ": prime must be 2 or 3");
        k.p = tok[0] == "2" ? 2 : 3;
        k.v4 = parse_val(tok[1]);
        k.v6 = parse_val(tok[2]);
        k.vD = parse_val(tok[3]);
        if (k.vD == kInfinite) throw MalformedTable("line " + std::to_string(lineno) + ": vD cannot be inf");
        Integer m;
        mpz_ui_pow_ui(m.get_mpz_t(), k.p, oracle_modulus_exponent(k.p));
        for (int i : {4, 5}) {
            Integer r;
            if (r.set_str(tok[static_cast<std::size_t>(i)], 10) != 0 || r < 0 || r >= m)
                throw MalformedTable("line " + std::to_string(lineno) + ": residue out of range");
            (i == 4 ? k.c4res : k.c6res) = r;
        }
        int w = 0;
        if (tok[6] == "1" || tok[6] == "+1")
            w = 1;
        else if (tok[6] == "-1")
            w = -1;
        else
            throw MalformedTable("line " + std::to_string(lineno) + ": root number must be 1 or -1");
        try {
            t.insert(k, w);
        } catch (const MalformedTable&) {
            throw MalformedTable("line " + std::to_string(lineno) + ": duplicate key");
        }
    }
    return t;
}

OracleTable OracleTable::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw MalformedTable("cannot open oracle table '" + path + "'");
    return parse(in);
}

void OracleTable::insert(const OracleKey& key, int w) {
    if (w != 1 && w != -1) throw MalformedTable("root number must be 1 or -1");
    if (!entries_.emplace(key, w).second) throw MalformedTable("duplicate oracle key");
}

std::optional<int> OracleTable::lookup(const OracleKey& key) const {
    auto it = entries_.find(key);
    if (it == entries_.end()) return std::nullopt;
    return it->second;
}

void OracleTable::write(std::ostream& out) const {
    auto v = [](int x) { return x == kInfinite ? std::string("inf") : std::to_string(x); };
    for (const auto& [k, w] : entries_)
        out << k.p << ' ' << v(k.v4) << ' ' << v(k.v6) << ' ' << v(k.vD) << ' ' << k.c4res << ' ' << k.c6res << ' '
            << w << '\n';
}

// ---------------------------------------------------------------- local data

OracleKey oracle_key(const LocalDatum& d) {
    if (d.p != 2 && d.p != 3) throw std::invalid_argument("oracle_key: p must be 2 or 3");
    OracleKey k;
    k.p = static_cast<unsigned>(d.p.get_ui());
    k.v4 = d.v4;
    k.v6 = d.v6;
    k.vD = d.vD;
    Integer m;
    mpz_ui_pow_ui(m.get_mpz_t(), k.p, oracle_modulus_exponent(k.p));
    k.c4res = d.c4 == 0 ? Integer(0) : residue(d.c4, m);
    k.c6res = d.c6 == 0 ? Integer(0) : residue(d.c6, m);
    return k;
}

int local_root_number(const LocalDatum& d) {
    const Integer& p = d.p;
    switch (d.klass) {
        case LocalClass::Good: return 1;
        case LocalClass::MultSplit: return -1;
        case LocalClass::MultNonSplit: return 1;
        case LocalClass::AddPotMult:
            if (p == 2) return kUndetermined;
            return sign_of_kron(-1, p);
        case LocalClass::AddPotGood:
            if (p == 2 || p == 3) return kUndetermined;
            if (d.vD % 4 == 2) return sign_of_kron(-1, p);
            if (d.vD % 2 == 1 && d.vD % 3 == 0) return sign_of_kron(-2, p);
            if (d.vD % 4 == 0 && d.vD % 3 != 0) return sign_of_kron(-3, p);
            return kUndetermined;  // not reached for minimal models
    }
    return kUndetermined;
}

LocalDatum local_datum(const FiberCurve& f, const Integer& p, const OracleTable* oracle) {
    LocalDatum d;
    d.p = p;
    const MinimalData m = minimalize_at(f.c4, f.c6, f.delta, p);
    d.k = m.k;
    Rational c4 = scale_pow(f.c4, p, -4 * m.k), c6 = scale_pow(f.c6, p, -6 * m.k);
    int v4 = m.v4, v6 = m.v6, vD = m.vD;
    if (p == 2 || p == 3) {
        const Rational delta = scale_pow(f.delta, p, -12 * m.k);
        if (!kraus_integral(c4, c6, delta, static_cast<unsigned>(p.get_ui()))) {
            // one step less is always an integral model
            d.k -= 1;
            c4 = scale_pow(c4, p, 4);
            c6 = scale_pow(c6, p, 6);
            if (v4 != kInfinite) v4 += 4;
            if (v6 != kInfinite) v6 += 6;
            vD += 12;
        }
    }
    d.c4 = c4;
    d.c6 = c6;
    d.v4 = v4;
    d.v6 = v6;
    d.vD = vD;

    if (vD == 0) {
        d.klass = LocalClass::Good;
    } else if (v4 == 0) {
        d.klass = -kron_unit(-c6, p) == -1 ? LocalClass::MultSplit : LocalClass::MultNonSplit;
    } else if (p >= 5) {
        d.klass = (v4 == 2 && v6 == 3 && vD > 6) ? LocalClass::AddPotMult : LocalClass::AddPotGood;
    } else {
        // potentially multiplicative iff v(j) < 0
        const bool pot_mult = v4 != kInfinite && 3 * v4 < vD;
        d.klass = pot_mult ? LocalClass::AddPotMult : LocalClass::AddPotGood;
    }
    d.w = local_root_number(d);
    if (d.w == kUndetermined && oracle != nullptr && (p == 2 || p == 3)) {
        if (auto w = oracle->lookup(oracle_key(d))) {
            d.w = *w;
            d.from_table = true;
        }
    }
    return d;
}

FiberReport global_root_number_over(const FiberCurve& f, const std::vector<Integer>& candidates,
                                    const OracleTable* oracle) {
    FiberReport r;
    r.curve = f;
    std::set<Integer> primes{Integer(2), Integer(3)};
    primes.insert(candidates.begin(), candidates.end());
    int product = 1;
    for (const auto& p : primes) {
        LocalDatum d = local_datum(f, p, oracle);
        if (d.klass == LocalClass::Good) continue;
        if (d.w == kUndetermined)
            r.undetermined_primes.push_back(p);
        else
            product *= d.w;
        r.locals.push_back(std::move(d));
    }
    r.global = r.undetermined_primes.empty() ? r.w_infinity * product : kUndetermined;
    return r;
}

FiberReport global_root_number(const FiberCurve& f, const OracleTable* oracle, const FactorBudget& budget) {
    std::vector<Integer> primes;
    auto add_primes = [&](const Integer& n) {
        if (abs(n) <= 1) return;
        const auto fac = factorize(n, budget);
        require_complete(fac, n);
        for (const auto& pp : fac.factors) primes.push_back(pp.prime);
    };
    add_primes(f.delta.get_num());
    add_primes(f.delta.get_den());
    add_primes(f.c4.get_den());
    add_primes(f.c6.get_den());
    return global_root_number_over(f, primes, oracle);
}

PrimeCover prime_cover(const EllipticSurface& s) {
    validate(s);
    const RatFunc delta = discriminant(s);
    std::set<IntPoly> places;
    PrimeCover c;
    for (const RatFunc* g : {&s.c4, &s.c6, &delta}) {
        if (g->is_zero()) continue;
        const Rational& k = g->scalar();
        c.constant *= k.get_num() * k.get_den();
        for (const IntPoly* p : {&g->num(), &g->den()}) {
            const FactorList fl = factor_q(*p);
            c.constant *= fl.content;
            for (const auto& [q, e] : fl.factors)
                if (q.degree() > 0) places.insert(q);
        }
    }
    c.constant = abs(c.constant);
    for (const auto& q : places) c.forms.push_back(homogenize_place(q));
    c.forms.push_back(HomPoly::x());
    return c;
}

std::vector<Integer> cover_primes(const PrimeCover& c, const Integer& x, const Integer& y,
                                  const FactorBudget& budget) {
    std::vector<Integer> out;
    auto add = [&](const Integer& n) {
        const Integer m = abs(n);
        if (m <= 1) return;
        const auto fac = factorize(m, budget);
        require_complete(fac, m);
        for (const auto& pp : fac.factors) out.push_back(pp.prime);
    };
    add(c.constant);
    for (const auto& f : c.forms) add(f.eval(x, y));
    return out;
}

}  // namespace rootnum
