// Acceptance checks. Prints one PASS/FAIL line per criterion, preceded by
// indented detail lines; exits nonzero when any criterion fails.
//
// usage: acceptance [--oracle TABLE] [--jobs N]

#include "published_curves.hpp"

#include "rootnum/averaging.hpp"
#include "rootnum/builder.hpp"
#include "rootnum/descent.hpp"
#include "rootnum/errors.hpp"
#include "rootnum/fiber.hpp"
#include "rootnum/modform.hpp"
#include "rootnum/polytext.hpp"
#include "rootnum/sieve.hpp"
#include "rootnum/surface.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <cstring>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <vector>

using namespace rootnum;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

[[gnu::format(printf, 1, 2)]] void detail(const char* fmt, ...) {
    std::va_list args;
    va_start(args, fmt);
    std::printf("    ");
    std::vprintf(fmt, args);
    std::printf("\n");
    va_end(args);
}

struct Outcome {
    int failures = 0;
    void report(int id, bool ok, const std::string& what, double secs, double budget) {
        const bool in_time = budget <= 0 || secs < budget;
        std::printf("criterion %d: %s  %s  (%.2f s", id, ok && in_time ? "PASS" : "FAIL", what.c_str(), secs);
        if (budget > 0) std::printf(", budget %.0f s", budget);
        std::printf(")\n");
        if (!in_time) std::printf("    over the time budget\n");
        failures += !(ok && in_time);
        std::fflush(stdout);
    }
};

// ------------------------------------------------------------------ 1

struct Vector {
    const char* name;
    const char* c4;
    const char* c6;
    const char* M;
};

const Vector kVectors[] = {
    {"first (j, d) family", "1 - 1728*t", "(1 - 1728*t)^2", "y"},
    {"second (j, d) family", "t^-2*(t^-2 - 1728)", "t^-2*(t^-2 - 1728)^2", "y"},
    {"third (j, d) family", "(t+1)^2*(t^-4 - 3)*(t^-4 - 1731)", "(t+1)^3*(t^-4 - 3)*(t^-4 - 1731)^2", "y"},
    {"table row 1", "1 + 8/3*t + t^2", "1 + 25/6*t + 4*t^2 + t^3", "(12*x + 5*y)*(3*x + 8*y)*y"},
    {"table row 2", "2 + 4*t + t^2", "1 + 9*t + 6*t^2 + t^3", "(7*x + 2*y)*(x^2 + 4*x*y + y^2)"},
    {"table row 3", "2 - 4*t + t^2", "3 + 9*t - 6*t^2 + t^3", "x^3 + 102*x^2*y - 63*x*y^2 + 10*y^3"},
    {"table row 4", "4", "11 + t", "x*(3*x + y)*(19*x + y)"},
    {"table row 5", "3", "2 + 7*t", "x*(-23*x^2 + 28*x*y + 49*y^2)"},
    {"table row 6", "1 + t", "-1 + 3*t", "x*y*(-3*x + y)"},
    {"table row 7", "-2 + 6*t + t^2", "-45/2 + 21/2*t + 9*t^2 + t^3", "-2057*x^3 + 2178*x^2*y + 363*x*y^2"},
    {"table row 8", "(t+1)*(t+3)", "13 + 12*t + 3*t^2", "x*(13*x^2 + 12*x*y + 3*y^2)"},
    {"x^3 + 2y^3 family", "1 - 1728*(t^3 + 1)", "(1 - 1728*(t^3 + 1))^2", "x^3 + 2*y^3"},
};

void criterion_1(Outcome& out) {
    const auto t0 = Clock::now();
    int matched = 0;
    for (const Vector& v : kVectors) {
        const SurfaceAnalysis a = analyze(EllipticSurface{parse_ratfunc(v.c4), parse_ratfunc(v.c6)});
        const bool ok = equal_up_to_unit(a.M, parse_form(v.M));
        matched += ok;
        detail("%-22s %s  expected %s, got %s", v.name, ok ? "match   " : "MISMATCH", v.M, to_string(a.M).c_str());
    }
    const int total = static_cast<int>(std::size(kVectors));
    out.report(1, matched == total, "M test vectors " + std::to_string(matched) + "/" + std::to_string(total),
               seconds_since(t0), 5);
}

// ------------------------------------------------------------------ 2

void criterion_2(Outcome& out, unsigned jobs) {
    const auto t0 = Clock::now();
    const CensusReport r = census(IntPoly{2, 0, 0, 1}, 100000, 1000, jobs);
    const double frac = static_cast<double>(r.count) / static_cast<double>(r.domain);
    detail("x^3 + 2, N = 100000: %llu square-free, count/N = %.6f, Euler product (p <= 1000) = %.6f",
           static_cast<unsigned long long>(r.count), frac, to_double(r.main_term));
    detail("difference %.6f, incomplete %llu, delta(N) = %llu", r.residual,
           static_cast<unsigned long long>(r.incomplete), static_cast<unsigned long long>(r.delta));
    out.report(2, std::abs(r.residual) < 0.01 && r.incomplete == 0, "square-free census within 0.01",
               seconds_since(t0), 60);
}

// ------------------------------------------------------------------ 3

void criterion_3(Outcome& out, unsigned jobs) {
    const auto t0 = Clock::now();
    const AverageReport a = sweep_lambda_poly(parse_bipoly("x*y*(x + y)"), Sector::full(), LatticeCoset(), 1000, true, jobs);
    const AverageReport b = sweep_lambda_poly(parse_bipoly("x^3 + 2*y^3"), Sector::full(), LatticeCoset(), 300, true, jobs);
    BoxDomain box;
    box.x_lo = 1;
    box.x_hi = 1000;
    box.y_lo = 1;
    box.y_hi = 31;
    box.coprime = false;
    box.value_bound = 1000000;
    const AverageReport c = sweep_poly(parse_bipoly("x^2 + y^4"), ArithFunction::Moebius, box, jobs);
    detail("lambda(xy(x+y)), coprime pairs in [-1000,1000]^2: %.6f over %llu", a.numeric(),
           static_cast<unsigned long long>(a.count));
    detail("lambda(x^3+2y^3), coprime pairs in [-300,300]^2: %.6f over %llu", b.numeric(),
           static_cast<unsigned long long>(b.count));
    detail("mu(a^2+b^4), a, b >= 1, a^2+b^4 <= 10^6: %.6f over %llu", c.numeric(),
           static_cast<unsigned long long>(c.count));
    const std::uint64_t incomplete = a.skipped.incomplete + b.skipped.incomplete + c.skipped.incomplete;
    if (incomplete) detail("%llu values not fully factored", static_cast<unsigned long long>(incomplete));
    const bool ok = std::abs(a.numeric()) <= 0.05 && std::abs(b.numeric()) <= 0.1 && std::abs(c.numeric()) <= 0.05;
    out.report(3, ok, "lambda/mu averages within 0.05, 0.1, 0.05", seconds_since(t0), 300);
}

// ------------------------------------------------------------------ 4

/// Reduced primitive forms (a, b, c) of discriminant D < 0, counted directly.
std::int64_t reduced_forms(std::int64_t D) {
    std::int64_t h = 0;
    for (std::int64_t a = 1; 3 * a * a <= -D; ++a)
        for (std::int64_t b = -a + 1; b <= a; ++b) {
            const std::int64_t num = b * b - D;
            if (num % (4 * a)) continue;
            const std::int64_t c = num / (4 * a);
            if (c < a || (c == a && b < 0)) continue;
            if (std::gcd(std::gcd(a, std::abs(b)), c) != 1) continue;
            ++h;
        }
    return h;
}

void criterion_4(Outcome& out) {
    const auto t0 = Clock::now();
    bool ok = true;
    const std::int64_t h44 = reduced_forms(-44);
    const Rational t11 = fricke_trace(11, 2);
    detail("h(-44) by enumeration = %lld, library = %lld; Tr W_11 on S_2(11) = %s", static_cast<long long>(h44),
           static_cast<long long>(class_number(-44)), to_string(t11).c_str());
    ok = ok && h44 == 3 && class_number(-44) == 3 && t11 == -1;

    int non_integral = 0, applicable = 0;
    for (std::int64_t N = 1; N <= 10000; ++N) {
        if (N == 4) continue;
        ++applicable;
        non_integral += fricke_trace(N, 2).get_den() != 1;
    }
    detail("Tr W_N integral for %d of %d applicable N <= 10^4", applicable - non_integral, applicable);
    ok = ok && non_integral == 0;

    // fit C on square-free N <= 5000, then test the bound on 5000 < N <= 10^4
    double C = 0;
    int violations = 0, checked = 0;
    double worst = 0;
    for (std::int64_t N = 5; N <= 10000; ++N) {
        if (!is_squarefree_u64(static_cast<std::uint64_t>(N)) || excluded_level(N)) continue;
        const double ratio = std::abs(to_double(eta_sum(N, 2))) / eta_bound_shape(N);
        if (N <= 5000) {
            C = std::max(C, ratio);
        } else {
            ++checked;
            worst = std::max(worst, ratio);
            violations += ratio > C;
        }
    }
    detail("fitted C = %.4f on N <= 5000; largest ratio on 5000 < N <= 10^4 is %.4f, %d of %d above C", C, worst,
           violations, checked);
    ok = ok && violations == 0;
    out.report(4, ok, "Fricke traces and the newform sum bound", seconds_since(t0), 30);
}

// ------------------------------------------------------------------ 5

// non-constant j with M = 1; W does not average to 0 over t > 0
const char* kTrivialMC4 = "144*((t^5-1)/(t-1))*(((t^5-1)/(t-1))^3 - (6*(t^7-1)/(t-1))^2)^2";
const char* kTrivialMC6 = "1728*(6*(t^7-1)/(t-1))*(((t^5-1)/(t-1))^3 - (6*(t^7-1)/(t-1))^2)^3";

void criterion_5(Outcome& out, const std::optional<OracleTable>& oracle, unsigned jobs) {
    const auto t0 = Clock::now();
    int agree = 0;
    const int total = static_cast<int>(std::size(testdata::kCurves));
    for (const auto& c : testdata::kCurves) {
        const FiberCurve f = curve_from_ainvariants(c.a[0], c.a[1], c.a[2], c.a[3], c.a[4]);
        const FiberReport r = global_root_number(f);
        if (r.global == c.w)
            ++agree;
        else
            detail("%s: computed %d, published %d", c.label, r.global, c.w);
    }
    detail("%d of %d curated curves match the published parity", agree, total);
    bool ok = agree == total;

    const EllipticSurface s{parse_ratfunc(kTrivialMC4), parse_ratfunc(kTrivialMC6)};
    const OracleTable* table = oracle ? &*oracle : nullptr;
    const PairSampler w = root_number_sampler(s, table);
    const AverageReport pos = av_rational(w, Sector::quadrant(1, 1), LatticeCoset(), 100, jobs);
    const AverageReport neg = av_rational(w, Sector::quadrant(1, -1), LatticeCoset(), 100, jobs);
    for (const auto* r : {&pos, &neg}) {
        detail("%s: enumerated %llu, determined %llu, undetermined %llu, incomplete %llu, singular %llu, "
               "average over determined %.4f",
               r == &pos ? "t = y/x" : "t = -y/x", static_cast<unsigned long long>(r->enumerated),
               static_cast<unsigned long long>(r->count), static_cast<unsigned long long>(r->skipped.undetermined),
               static_cast<unsigned long long>(r->skipped.incomplete),
               static_cast<unsigned long long>(r->skipped.singular), r->numeric());
    }
    const bool complete = pos.enumerated > 0 && neg.enumerated > 0;
    if (!oracle) {
        detail("no p = 2, 3 table supplied: the printed 0.395 / 0.35 / 0.351 are not evaluated");
        ok = ok && complete;
    } else {
        const double s_pos = to_double(pos.sum), s_neg = to_double(neg.sum);
        const double v1 = s_pos / 625, v2 = s_neg / 625, v3 = s_pos / 10000;
        detail("with table: %.4f (0.395), %.4f (0.35), %.4f (0.351)", v1, v2, v3);
        const bool all_determined = pos.skipped.undetermined + neg.skipped.undetermined == 0;
        ok = ok && all_determined && std::abs(v1 - 0.395) <= 0.005 && std::abs(v2 - 0.35) <= 0.005 &&
             std::abs(v3 - 0.351) <= 0.005;
    }
    out.report(5, ok, oracle ? "fiber root numbers, with p = 2, 3 table" : "fiber root numbers (table-free part)",
               seconds_since(t0), 0);
}

// ------------------------------------------------------------------ 6

std::mt19937_64& rng() {
    static std::mt19937_64 g(0xacce97);
    return g;
}

long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng()); }

IntPoly random_poly(int deg, long bound) {
    std::vector<Integer> c;
    for (int i = 0; i <= deg; ++i) c.emplace_back(uniform(-bound, bound));
    if (c.back() == 0) c.back() = 1;
    return IntPoly(c);
}

bool arith_identity() {
    const auto lam = liouville_table(10000);
    const auto mu = moebius_table(10000);
    for (std::uint32_t n = 1; n <= 10000; ++n) {
        int s = 0;
        for (std::uint32_t d = 1; d <= n; ++d)
            if (n % d == 0) s += std::abs(mu[d]) * lam[n / d];
        if (s != (n == 1)) return false;
    }
    return true;
}

int builder_families() {
    int good = 0, built = 0;
    while (built < 50) {
        HomPoly P = HomPoly::constant(1);
        for (long i = 0, n = uniform(1, 3); i < n; ++i) {
            const unsigned d = static_cast<unsigned>(uniform(1, 2));
            std::vector<Integer> c;
            for (unsigned j = 0; j <= d; ++j) c.emplace_back(uniform(-5, 5));
            if (c.back() == 0) c.back() = 1;
            P = P * HomPoly(d, c);
        }
        if (P.degree() == 0 || !is_squarefree_hom(P)) continue;
        std::size_t nq = 0;
        for (const auto& [f, e] : factor_hom(P).factors) nq += !(f == deg_place());
        std::vector<unsigned> k(nq);
        for (auto& v : k) v = static_cast<unsigned>(uniform(1, 2));
        try {
            const FamilyRecipe r = make_recipe(P, k, uniform(0, 1) ? IntPoly{1} : random_poly(1, 4),
                                               uniform(0, 2) ? IntPoly{1} : random_poly(1, 4),
                                               random_poly(static_cast<int>(uniform(0, 4)), 6),
                                               uniform(0, 1) ? IntPoly{1} : random_poly(1, 4));
            const SurfaceAnalysis a = analyze(r.surface());
            ++built;
            good += divides_hom(a.M, a.Bprime) && divides_hom(a.Bprime, a.B);
        } catch (const TargetUnachievable&) {
        } catch (const NotASurface&) {
        } catch (const DegreeTooLarge&) {
        }
    }
    return good;
}

int resultant_gcd() {
    int good = 0;
    for (int i = 0; i < 100; ++i) {
        IntPoly f = random_poly(static_cast<int>(uniform(1, 4)), 9);
        IntPoly g = random_poly(static_cast<int>(uniform(1, 4)), 9);
        if (i % 2 == 0) {
            const IntPoly c = random_poly(static_cast<int>(uniform(1, 2)), 5);
            f = f * c;
            g = g * c;
        }
        const IntPoly h = gcd(f, g);
        good += divides_q(h, f) && divides_q(h, g) && (resultant(f, g) == 0) == (h.degree() > 0);
    }
    return good;
}

int quartic_images() {
    int good = 0, done = 0;
    while (done < 100) {
        // f = m prod (x - r_i) + d q(x)^2 passes through (r_i, q(r_i)) on d y^2 = f(x)
        long r[4];
        for (auto& v : r) v = uniform(-6, 6);
        const IntPoly q(std::vector<Integer>{Integer(uniform(-4, 4)), Integer(uniform(-4, 4)), Integer(uniform(-2, 2))});
        long d = 0;
        do d = uniform(-15, 15);
        while (d == 0 || !is_squarefree(Integer(d)));
        IntPoly f = IntPoly::constant(Integer(uniform(1, 3) * (uniform(0, 1) ? 1 : -1)));
        for (long v : r) f = f * IntPoly(std::vector<Integer>{Integer(-v), Integer(1)});
        f = f + IntPoly::constant(Integer(d)) * q * q;
        const Integer s = q.eval(Integer(r[0]));
        if (f.degree() != 4 || discriminant(f) == 0 || s == 0) continue;
        ++done;
        const QuarticMap phi(f, Integer(d), Rational(r[0]), Rational(s));
        bool ok = phi(Rational(r[0]), Rational(s)).infinity;
        for (long v : r) {
            const Rational y(q.eval(Integer(v)));
            ok = ok && phi.target().contains(phi(Rational(v), y)) && phi.target().contains(phi(Rational(v), -y));
        }
        good += ok;
    }
    return good;
}

bool height_quadratic(double& ratio) {
    const WeierstrassTwist E{Integer(1), Integer(0), Integer(0), Integer(-2)};
    const CurvePoint P = CurvePoint::at(3, 5);
    ratio = canonical_height(E, E.dbl(P), 4) / canonical_height(E, P, 4);
    return std::abs(ratio / 4 - 1) <= 0.05;
}

void criterion_6(Outcome& out) {
    const auto t0 = Clock::now();
    const bool id = arith_identity();
    detail("sum over d | n of |mu(d)| lambda(n/d) = [n = 1] for n <= 10^4: %s", id ? "holds" : "FAILS");
    const int bf = builder_families();
    detail("M | B' | B on %d of 50 random builder families", bf);
    const int rg = resultant_gcd();
    detail("resultant/gcd consistent on %d of 100 random pairs", rg);
    const int qi = quartic_images();
    detail("quartic map images on the curve for %d of 100 random base points", qi);
    double ratio = 0;
    const bool hq = height_quadratic(ratio);
    detail("h(2P)/h(P) = %.4f at n = 4", ratio);
    out.report(6, id && bf == 50 && rg == 100 && qi == 100 && hq, "invariant suites", seconds_since(t0), 120);
}

}  // namespace

int main(int argc, char** argv) {
    std::optional<OracleTable> oracle;
    unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
    for (int i = 1; i < argc; ++i) {
        if (!std::strcmp(argv[i], "--oracle") && i + 1 < argc)
            oracle = OracleTable::load(argv[++i]);
        else if (!std::strcmp(argv[i], "--jobs") && i + 1 < argc)
            jobs = static_cast<unsigned>(std::max(1, std::atoi(argv[++i])));
        else {
            std::fprintf(stderr, "usage: %s [--oracle TABLE] [--jobs N]\n", argv[0]);
            return 2;
        }
    }
    Outcome out;
    criterion_1(out);
    criterion_2(out, jobs);
    criterion_3(out, jobs);
    criterion_4(out);
    criterion_5(out, oracle, jobs);
    criterion_6(out);
    std::printf("%d of 6 criteria failed\n", out.failures);
    return out.failures ? 1 : 0;
}
