#include "rootnum/builder.hpp"

#include "rootnum/errors.hpp"

#include <algorithm>
#include <stdexcept>

namespace rootnum {

EllipticSurface from_j_d(const RatFunc& j, const RatFunc& d) {
    if (j.is_zero()) throw DegenerateJ("j is identically 0");
    const RatFunc jm = j - RatFunc(1728);
    if (jm.is_zero()) throw DegenerateJ("j is identically 1728");
    if (d.is_zero()) throw std::invalid_argument("twist d must be nonzero");
    const RatFunc d2 = d * d;
    EllipticSurface s{d2 * j * jm, d2 * d * j * jm * jm};
    validate(s);
    return s;
}

namespace {

bool coprime(const IntPoly& a, const IntPoly& b) { return gcd(a, b).degree() <= 0; }

IntPoly radical(const IntPoly& f) {
    IntPoly r{1};
    for (const auto& [g, e] : factor_q(f).factors) r *= g;
    return r;
}

[[noreturn]] void unachievable(const std::string& why) { throw TargetUnachievable("recipe constraint violated: " + why); }

}  // namespace

FamilyRecipe make_recipe(const HomPoly& P, const std::vector<unsigned>& k, const IntPoly& R1, const IntPoly& R2,
                         const IntPoly& R3, const IntPoly& R4) {
    if (P.degree() == 0) throw std::invalid_argument("target must be nonconstant");
    if (!is_squarefree_hom(P)) throw NotSquarefree("target must be square-free");
    for (const IntPoly* R : {&R1, &R2, &R3, &R4})
        if (R->is_zero()) unachievable("auxiliary polynomials must be nonzero");

    FamilyRecipe r;
    r.target = P.normalized();
    r.R1 = R1;
    r.R2 = R2;
    r.R3 = R3;
    r.R4 = R4;

    bool has_x = false;
    for (const auto& [f, e] : factor_hom(P).factors) {
        if (f == deg_place()) {
            has_x = true;
            continue;
        }
        r.Q.emplace_back(f.at_x1().primitive(), 0);
    }
    if (k.size() != r.Q.size()) throw std::invalid_argument("need one exponent per factor of the target other than x");
    int sum = 0;
    IntPoly prodQ{1};
    for (std::size_t i = 0; i < k.size(); ++i) {
        if (k[i] == 0) unachievable("exponents k_i must be positive");
        r.Q[i].second = k[i];
        sum += static_cast<int>(k[i]) * r.Q[i].first.degree();
        prodQ *= r.Q[i].first.pow(k[i]);
    }

    for (const auto& [q, e] : r.Q)
        for (const IntPoly* R : {&R1, &R2, &R3, &R4})
            if (!coprime(*R, q)) unachievable("R1..R4 must be coprime to every Q_i");
    if (!is_squarefree(R1)) unachievable("R1 must be square-free");
    if (!coprime(R1, R2) || !coprime(R1, R3) || !coprime(R2, R3)) unachievable("R1, R2, R3 must be pairwise coprime");
    if (!coprime(R4, R1) || !coprime(R4, R2)) unachievable("R4 must be prime to R1 and R2");
    if (has_x ? R3.degree() <= sum : R3.degree() > sum)
        unachievable(has_x ? "x | P needs deg R3 > sum k_i deg Q_i" : "deg R3 must not exceed sum k_i deg Q_i");

    r.j = RatFunc(R3) / RatFunc(R1 * R2 * R2 * prodQ);
    r.d = RatFunc(R4 * radical(R2) * prodQ);
    return r;
}

FamilyRecipe target_m(const HomPoly& P) {
    if (P.degree() == 0) throw std::invalid_argument("target must be nonconstant");
    if (!is_squarefree_hom(P)) throw NotSquarefree("target must be square-free");
    const HomFactorList fl = factor_hom(P);
    const bool has_x = std::any_of(fl.factors.begin(), fl.factors.end(),
                                   [](const auto& fe) { return fe.first == deg_place(); });
    const std::vector<unsigned> k(fl.factors.size() - (has_x ? 1 : 0), 1);
    const IntPoly one{1};

    auto achieves = [&](const FamilyRecipe& r) {
        return equal_up_to_unit(analyze(r.surface()).M, P);
    };

    if (!has_x) {
        FamilyRecipe r = make_recipe(P, k, one, one, one, one);
        if (!achieves(r)) throw TargetUnachievable("default recipe does not give the target");
        return r;
    }
    // R3 = t^n + c; the parity of n - sum deg Q_i decides the type at x
    const int sum = static_cast<int>(P.degree()) - 1;
    for (int n = sum + 1; n <= sum + 2; ++n) {
        for (long c : {1L, -1L, 2L, -2L, 3L, -3L, 5L, -5L, 7L, -7L}) {
            const IntPoly R3 = IntPoly::monomial(1, static_cast<unsigned>(n)) + IntPoly::constant(c);
            try {
                FamilyRecipe r = make_recipe(P, k, one, one, R3, one);
                if (achieves(r)) return r;
            } catch (const TargetUnachievable&) {
            }
        }
    }
    throw TargetUnachievable("no R3 = t^n + c gives the target");
}

unsigned predict_deg_irr_bprime(const FamilyRecipe& r) {
    IntPoly prodQ{1};
    for (const auto& [q, e] : r.Q) prodQ *= q.pow(e);
    const IntPoly last = r.R3 - Integer(1728) * r.R1 * r.R2 * r.R2 * prodQ;
    unsigned best = deg_irr(r.target);
    for (const IntPoly* R : {&r.R1, &r.R2, &r.R3, &last})
        if (!R->is_zero()) best = std::max(best, deg_irr(*R));
    return best == 0 ? 1 : best;
}

}  // namespace rootnum
