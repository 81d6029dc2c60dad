// Zassenhaus factorization over Q: square-free decomposition, factorization
// modulo a small prime (Cantor-Zassenhaus), Hensel lifting, recombination.

#include "rootnum/errors.hpp"
#include "rootnum/poly.hpp"

#include <algorithm>
#include <random>

namespace rootnum {

namespace {

using u64 = std::uint64_t;
using Fp = std::vector<u64>;  // low degree first, trimmed

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<unsigned __int128>(a) * b % p); }

u64 powmod(u64 b, u64 e, u64 p) {
    u64 r = 1;
    while (e) {
        if (e & 1) r = mulmod(r, b, p);
        b = mulmod(b, b, p);
        e >>= 1;
    }
    return r;
}

u64 inv_mod(u64 a, u64 p) { return powmod(a, p - 2, p); }

void trim(Fp& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

int deg(const Fp& f) { return static_cast<int>(f.size()) - 1; }

Fp reduce(const IntPoly& f, u64 p) {
    Fp r(f.coeffs().size());
    for (std::size_t i = 0; i < r.size(); ++i) {
        Integer m;
        mpz_fdiv_r_ui(m.get_mpz_t(), f.coeffs()[i].get_mpz_t(), p);
        r[i] = m.get_ui();
    }
    trim(r);
    return r;
}

Fp sub(Fp a, const Fp& b, u64 p) {
    if (b.size() > a.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
    trim(a);
    return a;
}

Fp mul(const Fp& a, const Fp& b, u64 p) {
    if (a.empty() || b.empty()) return {};
    Fp r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + mulmod(a[i], b[j], p)) % p;
    }
    trim(r);
    return r;
}

// Remainder and quotient of a by nonzero b.
std::pair<Fp, Fp> divmod(Fp a, const Fp& b, u64 p) {
    if (deg(a) < deg(b)) return {{}, a};
    const u64 inv = inv_mod(b.back(), p);
    Fp q(a.size() - b.size() + 1, 0);
    for (std::size_t i = q.size(); i-- > 0;) {
        const u64 c = mulmod(a[i + b.size() - 1], inv, p);
        q[i] = c;
        if (!c) continue;
        for (std::size_t j = 0; j < b.size(); ++j) a[i + j] = (a[i + j] + p - mulmod(c, b[j], p)) % p;
    }
    trim(a);
    trim(q);
    return {q, a};
}

Fp mod(const Fp& a, const Fp& b, u64 p) { return divmod(a, b, p).second; }

Fp monic(Fp f, u64 p) {
    if (f.empty()) return f;
    const u64 inv = inv_mod(f.back(), p);
    for (auto& c : f) c = mulmod(c, inv, p);
    return f;
}

Fp gcd(Fp a, Fp b, u64 p) {
    while (!b.empty()) {
        Fp r = mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a, p);
}

Fp derivative(const Fp& f, u64 p) {
    if (f.size() <= 1) return {};
    Fp d(f.size() - 1);
    for (std::size_t i = 1; i < f.size(); ++i) d[i - 1] = mulmod(f[i], i % p, p);
    trim(d);
    return d;
}

Fp powmod_poly(Fp b, const Integer& e, const Fp& m, u64 p) {
    Fp r{1};
    b = mod(b, m, p);
    const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
        r = mod(mul(r, r, p), m, p);
        if (mpz_tstbit(e.get_mpz_t(), i)) r = mod(mul(r, b, p), m, p);
    }
    return r;
}

// Splits a monic square-free product of degree-d irreducibles (p odd).
void equal_degree(const Fp& f, int d, u64 p, std::mt19937_64& rng, std::vector<Fp>& out) {
    if (deg(f) == d) {
        out.push_back(f);
        return;
    }
    Integer e;
    mpz_ui_pow_ui(e.get_mpz_t(), p, static_cast<unsigned long>(d));
    e = (e - 1) / 2;
    for (;;) {
        Fp a(static_cast<std::size_t>(deg(f)));
        for (auto& c : a) c = rng() % p;
        trim(a);
        if (deg(a) < 1) continue;
        Fp b = sub(powmod_poly(a, e, f, p), Fp{1}, p);
        Fp g = gcd(f, b, p);
        if (deg(g) > 0 && deg(g) < deg(f)) {
            equal_degree(g, d, p, rng, out);
            equal_degree(divmod(f, g, p).first, d, p, rng, out);
            return;
        }
    }
}

// Monic irreducible factors of a monic square-free f over F_p.
std::vector<Fp> factor_mod_p(Fp f, u64 p, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<Fp> out;
    Fp h{0, 1};
    const Fp x{0, 1};
    for (int d = 1; 2 * d <= deg(f); ++d) {
        h = powmod_poly(h, Integer(static_cast<unsigned long>(p)), f, p);
        Fp g = gcd(f, sub(h, x, p), p);
        if (deg(g) > 0) {
            equal_degree(g, d, p, rng, out);
            f = divmod(f, g, p).first;
            h = mod(h, f, p);
        }
    }
    if (deg(f) > 0) out.push_back(monic(f, p));
    return out;
}

// ---- arithmetic modulo m = p^k on Integer coefficient vectors

using Zm = std::vector<Integer>;

void trim(Zm& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

void reduce_in_place(Zm& f, const Integer& m) {
    for (auto& c : f) mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
    trim(f);
}

Zm mul(const Zm& a, const Zm& b, const Integer& m) {
    if (a.empty() || b.empty()) return {};
    Zm r(a.size() + b.size() - 1, Integer(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    reduce_in_place(r, m);
    return r;
}

Zm add(Zm a, const Zm& b, const Integer& m) {
    if (b.size() > a.size()) a.resize(b.size(), Integer(0));
    for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
    reduce_in_place(a, m);
    return a;
}

Zm lift_fp(const Fp& f) {
    Zm r;
    r.reserve(f.size());
    for (u64 c : f) r.emplace_back(static_cast<unsigned long>(c));
    return r;
}

Fp lower_fp(const Zm& f, u64 p) {
    Fp r(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) {
        Integer v;
        mpz_fdiv_r_ui(v.get_mpz_t(), f[i].get_mpz_t(), p);
        r[i] = v.get_ui();
    }
    trim(r);
    return r;
}

// Extended Euclid over F_p: s*a + t*b = 1 for coprime a, b.
std::pair<Fp, Fp> bezout(const Fp& a, const Fp& b, u64 p) {
    Fp r0 = a, r1 = b, s0{1}, s1{}, t0{}, t1{1};
    while (!r1.empty()) {
        auto [q, r] = divmod(r0, r1, p);
        Fp s2 = sub(s0, mul(q, s1, p), p);
        Fp t2 = sub(t0, mul(q, t1, p), p);
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    const u64 inv = inv_mod(r0[0], p);
    for (auto& c : s0) c = mulmod(c, inv, p);
    for (auto& c : t0) c = mulmod(c, inv, p);
    return {s0, t0};
}

// Lifts F = G*H (mod p), G and H monic, F monic mod p^k, to the same modulo p^k.
void hensel_lift(const Zm& F, Zm& G, Zm& H, u64 p, unsigned k) {
    const auto [s, t] = bezout(lower_fp(G, p), lower_fp(H, p), p);
    const Integer P(static_cast<unsigned long>(p));
    Integer pj = P;
    Integer mk;
    mpz_pow_ui(mk.get_mpz_t(), P.get_mpz_t(), k);
    for (unsigned j = 1; j < k; ++j) {
        // e = (F - GH) / p^j mod p
        Zm gh = mul(G, H, mk);
        Zm e = F;
        if (gh.size() > e.size()) e.resize(gh.size(), Integer(0));
        for (std::size_t i = 0; i < gh.size(); ++i) e[i] -= gh[i];
        reduce_in_place(e, mk);
        for (auto& c : e) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), pj.get_mpz_t());
        const Fp ep = lower_fp(e, p);
        const Fp a = mod(mul(t, ep, p), lower_fp(G, p), p);
        const Fp b = mod(mul(s, ep, p), lower_fp(H, p), p);
        Zm da = lift_fp(a), db = lift_fp(b);
        for (auto& c : da) c *= pj;
        for (auto& c : db) c *= pj;
        G = add(G, da, mk);
        H = add(H, db, mk);
        pj *= P;
    }
}

Integer symmetric(const Integer& c, const Integer& m) {
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
    if (2 * r > m) r -= m;
    return r;
}

// Factors a primitive square-free f with deg >= 2 and lc > 0.
std::vector<IntPoly> factor_squarefree(const IntPoly& f) {
    const int n = f.degree();
    // Pick among a few good primes the one giving the fewest modular factors.
    u64 best_p = 0;
    std::vector<Fp> best;
    int tried = 0;
    for (auto p32 : small_primes()) {
        const u64 p = p32;
        if (p < 3) continue;
        if (mpz_divisible_ui_p(f.lc().get_mpz_t(), p)) continue;
        Fp fp = reduce(f, p);
        if (deg(gcd(fp, derivative(fp, p), p)) > 0) continue;
        auto facs = factor_mod_p(monic(fp, p), p, 0x9E3779B97F4A7C15ull ^ p);
        if (best.empty() || facs.size() < best.size()) {
            best = std::move(facs);
            best_p = p;
        }
        if (best.size() == 1 || ++tried >= 5) break;
    }
    if (best.size() <= 1) return {f};
    const u64 p = best_p;

    // Factor coefficient bound |lc f| * 2^n * ||f||_2, doubled for symmetric residues.
    Integer norm2 = 0;
    for (const auto& c : f.coeffs()) norm2 += c * c;
    Integer bound = sqrt(norm2) + 1;
    bound <<= static_cast<unsigned long>(n);
    bound *= abs(f.lc());
    bound *= 2;
    unsigned k = 1;
    Integer mk(static_cast<unsigned long>(p));
    while (mk <= bound) {
        mk *= static_cast<unsigned long>(p);
        ++k;
    }

    // Monic F = lc^-1 f mod p^k, lifted factor by factor.
    Integer lc_inv;
    mpz_invert(lc_inv.get_mpz_t(), f.lc().get_mpz_t(), mk.get_mpz_t());
    Zm F(f.coeffs().begin(), f.coeffs().end());
    for (auto& c : F) c *= lc_inv;
    reduce_in_place(F, mk);

    std::vector<Zm> lifted;
    Zm rest = F;
    for (std::size_t i = 0; i + 1 < best.size(); ++i) {
        Zm g = lift_fp(best[i]);
        Fp hp{1};
        for (std::size_t j = i + 1; j < best.size(); ++j) hp = mul(hp, best[j], p);
        Zm h = lift_fp(hp);
        hensel_lift(rest, g, h, p, k);
        lifted.push_back(std::move(g));
        rest = std::move(h);
    }
    lifted.push_back(rest);

    // Recombination over subsets of increasing size.
    std::vector<IntPoly> out;
    IntPoly g = f;
    std::vector<Zm> pool = lifted;
    std::size_t s = 1;
    while (2 * s <= pool.size()) {
        bool found = false;
        std::vector<std::size_t> idx(s);
        for (std::size_t i = 0; i < s; ++i) idx[i] = i;
        for (;;) {
            Zm prod{Integer(g.lc())};
            for (auto i : idx) prod = mul(prod, pool[i], mk);
            std::vector<Integer> cand(prod.size());
            for (std::size_t i = 0; i < prod.size(); ++i) cand[i] = symmetric(prod[i], mk);
            IntPoly h = IntPoly(std::move(cand)).primitive();
            if (h.degree() > 0) {
                if (auto q = divide_exact(g, h)) {
                    out.push_back(h);
                    g = *q;
                    std::vector<Zm> next;
                    for (std::size_t i = 0, c = 0; i < pool.size(); ++i) {
                        if (c < s && idx[c] == i) {
                            ++c;
                            continue;
                        }
                        next.push_back(pool[i]);
                    }
                    pool = std::move(next);
                    // the remaining pool describes g mod p^k up to lc
                    found = true;
                    break;
                }
            }
            // next combination
            std::size_t i = s;
            while (i > 0 && idx[i - 1] == pool.size() - s + (i - 1)) --i;
            if (i == 0) break;
            ++idx[i - 1];
            for (std::size_t j = i; j < s; ++j) idx[j] = idx[j - 1] + 1;
        }
        if (!found) ++s;
    }
    if (g.degree() > 0) out.push_back(g.primitive());
    return out;
}

}  // namespace

FactorList factor_q(const IntPoly& f, unsigned degree_bound) {
    if (f.is_zero()) throw std::invalid_argument("factor_q: zero polynomial");
    FactorList out;
    out.content = f.content();
    if (f.lc() < 0) out.content = -out.content;
    const auto parts = squarefree_decomposition(f);
    // The bound applies to the square-free kernel, which is what gets factored.
    int kernel = 0;
    for (const auto& [part, mult] : parts) kernel += part.degree();
    if (kernel > static_cast<int>(degree_bound))
        throw DegreeTooLarge("factor_q: square-free kernel of degree " + std::to_string(kernel) +
                             " exceeds bound " + std::to_string(degree_bound));
    for (const auto& [part, mult] : parts) {
        IntPoly g = part;
        // strip the factor t first; it keeps constant terms nonzero below
        if (g[0] == 0) {
            out.factors.emplace_back(IntPoly::t(), mult);
            g = *divide_exact(g, IntPoly::t());
        }
        if (g.degree() <= 0) continue;
        if (g.degree() == 1) {
            out.factors.emplace_back(g.primitive(), mult);
            continue;
        }
        for (auto& h : factor_squarefree(g)) out.factors.emplace_back(h.primitive(), mult);
    }
    std::sort(out.factors.begin(), out.factors.end(),
              [](const auto& a, const auto& b) { return a.first < b.first || (!(b.first < a.first) && a.second < b.second); });
    return out;
}

}  // namespace rootnum
