#include "rootnum/surface.hpp"

#include "rootnum/errors.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace rootnum {

namespace {

int floor_div(int a, int b) {
    int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

int ceil_div(int a, int b) { return -floor_div(-a, b); }

void collect_places(const RatFunc& f, std::set<IntPoly>& out) {
    if (f.is_zero()) return;
    for (const IntPoly* p : {&f.num(), &f.den()}) {
        if (p->degree() < 1) continue;
        for (const auto& [q, e] : factor_q(*p).factors) out.insert(q);
    }
}

struct Shift {
    std::optional<int> a4, a6, aD;
    int k = 0;
};

Shift shift_for(std::optional<int> a4, std::optional<int> a6, int aD) {
    Shift s{a4, a6, aD, floor_div(aD, 12)};
    if (a4) s.k = std::min(s.k, floor_div(*a4, 4));
    if (a6) s.k = std::min(s.k, floor_div(*a6, 6));
    return s;
}

// Largest power of the primes in den(s) needed so that q1^w * s is integral.
void need_clearing(const Rational& s, int weight, std::map<Integer, int>& need) {
    if (s == 0) return;
    const Integer& den = s.get_den();
    if (den == 1) return;
    const auto f = factorize(den);
    require_complete(f, den);
    for (const auto& pp : f.factors) {
        const int e = ceil_div(static_cast<int>(pp.exponent), weight);
        auto& slot = need[pp.prime];
        slot = std::max(slot, e);
    }
}

HomPoly assemble(const Rational& scalar, const Integer& q1, int weight,
                 const std::vector<std::pair<IntPoly, int>>& finite, int e_inf) {
    HomPoly form = HomPoly::x().pow(static_cast<unsigned>(e_inf));
    for (const auto& [q, e] : finite)
        if (e > 0) form = form * homogenize_place(q).pow(static_cast<unsigned>(e));
    Integer qw;
    mpz_pow_ui(qw.get_mpz_t(), q1.get_mpz_t(), static_cast<unsigned long>(weight));
    Rational c = scalar * Rational(qw);
    c.canonicalize();
    if (c.get_den() != 1) throw std::logic_error("homogenize_invariants: clearing factor too small");
    return form.scaled(c.get_num());
}

}  // namespace

RatFunc discriminant(const EllipticSurface& s) { return (s.c4.pow(3) - s.c6.pow(2)) * RatFunc(Rational(1, 1728)); }

void validate(const EllipticSurface& s) {
    if (discriminant(s).is_zero()) throw NotASurface("discriminant (c4^3 - c6^2)/1728 vanishes identically");
}

RatFunc j_invariant(const EllipticSurface& s) {
    validate(s);
    return s.c4.pow(3) / discriminant(s);
}

bool is_constant_j(const EllipticSurface& s) { return j_invariant(s).is_constant(); }

std::string to_string(ReductionClass k) {
    switch (k) {
        case ReductionClass::Good: return "good";
        case ReductionClass::Multiplicative: return "multiplicative";
        case ReductionClass::AddPotMult: return "additive-potentially-multiplicative";
        case ReductionClass::AddPotGood: return "additive-potentially-good";
    }
    return "?";
}

std::string to_string(Badness b) {
    switch (b) {
        case Badness::NotBad: return "not-bad";
        case Badness::HalfBad: return "half-bad";
        case Badness::QuiteBad: return "quite-bad";
    }
    return "?";
}

ReductionClass classify_exponents(int e4, int e6, int eD) {
    if (eD == 0) return ReductionClass::Good;
    if (e4 == 0 && e6 == 0) return ReductionClass::Multiplicative;
    if (e4 == 2 && e6 == 3 && eD > 6) return ReductionClass::AddPotMult;
    return ReductionClass::AddPotGood;
}

Badness badness_of(int e4, int e6, int eD) {
    if (eD == 0) return Badness::NotBad;
    if (e4 >= 2 && e6 >= 3 && eD == 6) return Badness::HalfBad;
    return Badness::QuiteBad;
}

HomogenizedInvariants homogenize_invariants(const EllipticSurface& s) {
    validate(s);
    const RatFunc delta = discriminant(s);

    std::set<IntPoly> qs;
    collect_places(s.c4, qs);
    collect_places(s.c6, qs);
    collect_places(delta, qs);

    std::vector<std::pair<IntPoly, int>> f4, f6, fD;
    for (const auto& q : qs) {
        const Shift sh = shift_for(s.c4.valuation(q), s.c6.valuation(q), *delta.valuation(q));
        if (sh.a4) f4.emplace_back(q, *sh.a4 - 4 * sh.k);
        if (sh.a6) f6.emplace_back(q, *sh.a6 - 6 * sh.k);
        fD.emplace_back(q, *sh.aD - 12 * sh.k);
    }
    const Shift inf = shift_for(s.c4.valuation_infinity(), s.c6.valuation_infinity(), *delta.valuation_infinity());

    std::map<Integer, int> need;
    need_clearing(s.c4.scalar(), 4, need);
    need_clearing(s.c6.scalar(), 6, need);
    need_clearing(delta.scalar(), 12, need);
    HomogenizedInvariants out;
    for (const auto& [p, e] : need) {
        Integer pe;
        mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(e));
        out.q1 *= pe;
    }

    out.C4 = s.c4.is_zero() ? HomPoly() : assemble(s.c4.scalar(), out.q1, 4, f4, *inf.a4 - 4 * inf.k);
    out.C6 = s.c6.is_zero() ? HomPoly() : assemble(s.c6.scalar(), out.q1, 6, f6, *inf.a6 - 6 * inf.k);
    out.D = assemble(delta.scalar(), out.q1, 12, fD, *inf.aD - 12 * inf.k);
    return out;
}

int multiplicity(const HomPoly& p, const HomPoly& f) {
    if (f.is_zero()) return kInfinite;
    const IntPoly ft = f.at_x1();
    if (p.degree() == 1 && p.coeff(1) != 0 && p.coeff(0) == 0) {
        // p = c*x
        return static_cast<int>(f.degree()) - ft.degree();
    }
    const IntPoly q = p.at_x1().primitive();
    IntPoly g = ft.primitive();
    int m = 0;
    while (g.degree() >= q.degree()) {
        auto d = divide_exact(g, q);
        if (!d) break;
        g = std::move(*d);
        ++m;
    }
    return m;
}

std::vector<PlaceRecord> classify_places(const HomPoly& C4, const HomPoly& C6, const HomPoly& D) {
    if (D.is_zero()) throw NotASurface("discriminant form is zero");
    std::vector<PlaceRecord> out;
    bool have_x = false;
    const HomPoly x = HomPoly::x();
    for (const auto& [p, e] : factor_hom(D).factors) {
        PlaceRecord r;
        r.place = p;
        r.degree_place = p == x;
        have_x = have_x || r.degree_place;
        r.eD = static_cast<int>(e);
        out.push_back(std::move(r));
    }
    if (!have_x) {
        PlaceRecord r;
        r.place = x;
        r.degree_place = true;
        out.push_back(std::move(r));
    }
    for (auto& r : out) {
        r.e4 = multiplicity(r.place, C4);
        r.e6 = multiplicity(r.place, C6);
        r.klass = classify_exponents(r.e4, r.e6, r.eD);
        r.badness = badness_of(r.e4, r.e6, r.eD);
    }
    std::sort(out.begin(), out.end(), [](const PlaceRecord& a, const PlaceRecord& b) {
        if (a.degree_place != b.degree_place) return a.degree_place;
        return a.place < b.place;
    });
    return out;
}

MBB mbb(const std::vector<PlaceRecord>& places) {
    MBB out{HomPoly::constant(1), HomPoly::constant(1), HomPoly::constant(1)};
    for (const auto& r : places) {
        if (r.klass == ReductionClass::Multiplicative) out.M = out.M * r.place;
        if (r.badness != Badness::NotBad) out.B = out.B * r.place;
        if (r.badness == Badness::QuiteBad) out.Bprime = out.Bprime * r.place;
    }
    out.M = out.M.normalized();
    out.B = out.B.normalized();
    out.Bprime = out.Bprime.normalized();
    return out;
}

SurfaceAnalysis analyze(const EllipticSurface& s) {
    SurfaceAnalysis a;
    a.surface = s;
    a.j = j_invariant(s);
    a.j_constant = a.j.is_constant();
    a.hom = homogenize_invariants(s);
    a.places = classify_places(a.hom.C4, a.hom.C6, a.hom.D);
    MBB m = mbb(a.places);
    a.M = std::move(m.M);
    a.B = std::move(m.B);
    a.Bprime = std::move(m.Bprime);
    return a;
}

}  // namespace rootnum
