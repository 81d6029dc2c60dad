#include "rootnum/polytext.hpp"

#include "rootnum/errors.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>

namespace rootnum {

namespace {

// Bivariate polynomial with rational coefficients, used while parsing forms.
using QTerms = std::map<std::pair<unsigned, unsigned>, Rational>;

struct QPoly2 {
    QTerms terms;

    static QPoly2 constant(const Rational& c) {
        QPoly2 p;
        if (c != 0) p.terms[{0, 0}] = c;
        return p;
    }
    bool is_constant() const { return terms.empty() || (terms.size() == 1 && terms.count({0, 0})); }
    Rational constant_value() const {
        auto it = terms.find({0, 0});
        return it == terms.end() ? Rational(0) : it->second;
    }
    void clean() {
        for (auto it = terms.begin(); it != terms.end();) it = it->second == 0 ? terms.erase(it) : std::next(it);
    }
};

QPoly2 operator+(QPoly2 a, const QPoly2& b) {
    for (const auto& [k, v] : b.terms) a.terms[k] += v;
    a.clean();
    return a;
}

QPoly2 operator-(const QPoly2& a) {
    QPoly2 r = a;
    for (auto& [k, v] : r.terms) v = -v;
    return r;
}

QPoly2 operator*(const QPoly2& a, const QPoly2& b) {
    QPoly2 r;
    for (const auto& [ka, va] : a.terms)
        for (const auto& [kb, vb] : b.terms) r.terms[{ka.first + kb.first, ka.second + kb.second}] += va * vb;
    r.clean();
    return r;
}

// Value types the parser can evaluate into.
struct RatFuncOps {
    using V = RatFunc;
    char var;
    bool allows(char c) const { return c == var; }
    V variable(char) const { return RatFunc::t(); }
    V constant(const Rational& c) const { return RatFunc(c); }
    V add(const V& a, const V& b) const { return a + b; }
    V sub(const V& a, const V& b) const { return a - b; }
    V mul(const V& a, const V& b) const { return a * b; }
    V neg(const V& a) const { return -a; }
    // returns false on division by zero / bad exponent
    bool div(const V& a, const V& b, V& out, std::string& err) const {
        if (b.is_zero()) {
            err = "division by zero";
            return false;
        }
        out = a / b;
        return true;
    }
    bool pow(const V& a, long e, V& out, std::string& err) const {
        if (e < 0 && a.is_zero()) {
            err = "negative power of zero";
            return false;
        }
        out = a.pow(static_cast<int>(e));
        return true;
    }
};

struct Poly2Ops {
    using V = QPoly2;
    bool allows(char c) const { return c == 'x' || c == 'y'; }
    V variable(char c) const {
        QPoly2 p;
        p.terms[c == 'x' ? std::pair<unsigned, unsigned>{1, 0} : std::pair<unsigned, unsigned>{0, 1}] = 1;
        return p;
    }
    V constant(const Rational& c) const { return QPoly2::constant(c); }
    V add(const V& a, const V& b) const { return a + b; }
    V sub(const V& a, const V& b) const { return a + (-b); }
    V mul(const V& a, const V& b) const { return a * b; }
    V neg(const V& a) const { return -a; }
    bool div(const V& a, const V& b, V& out, std::string& err) const {
        if (!b.is_constant() || b.constant_value() == 0) {
            err = b.is_constant() ? "division by zero" : "division by a non-constant polynomial";
            return false;
        }
        out = a * QPoly2::constant(1 / b.constant_value());
        return true;
    }
    bool pow(const V& a, long e, V& out, std::string& err) const {
        if (e < 0) {
            err = "negative exponent in a polynomial";
            return false;
        }
        QPoly2 r = QPoly2::constant(1);
        for (long i = 0; i < e; ++i) r = r * a;
        out = r;
        return true;
    }
};

template <class Ops>
class Parser {
public:
    using V = typename Ops::V;

    Parser(std::string_view text, Ops ops) : s_(text), ops_(ops) {}

    V parse() {
        skip_ws();
        if (pos_ >= s_.size()) fail("empty expression");
        V v = expr();
        skip_ws();
        if (pos_ < s_.size()) fail(std::string("unexpected character '") + s_[pos_] + "'");
        return v;
    }

private:
    [[noreturn]] void fail(const std::string& what) const { fail_at(what, pos_); }

    [[noreturn]] void fail_at(const std::string& what, std::size_t at) const {
        std::size_t line = 1, col = 1;
        for (std::size_t i = 0; i < at && i < s_.size(); ++i) {
            if (s_[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw ParseError(what, line, col);
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    // expr := ['+'|'-'] term (('+'|'-') term)*
    V expr() {
        V v;
        if (accept('-'))
            v = ops_.neg(term());
        else {
            accept('+');
            v = term();
        }
        for (;;) {
            if (accept('+'))
                v = ops_.add(v, term());
            else if (accept('-'))
                v = ops_.sub(v, term());
            else
                return v;
        }
    }

    // term := power (('*' | '/' | implicit) power)*
    V term() {
        V v = power();
        for (;;) {
            skip_ws();
            if (accept('*')) {
                v = ops_.mul(v, power());
            } else if (pos_ < s_.size() && s_[pos_] == '/') {
                const std::size_t at = pos_;
                ++pos_;
                V d = power();
                std::string err;
                V out;
                if (!ops_.div(v, d, out, err)) fail_at(err, at);
                v = out;
            } else if (pos_ < s_.size() && (s_[pos_] == '(' || std::isalpha(static_cast<unsigned char>(s_[pos_])))) {
                v = ops_.mul(v, power());  // implicit product such as 2t or 3(x+y)
            } else {
                return v;
            }
        }
    }

    // power := atom ['^' ['-'] integer]
    V power() {
        V b = atom();
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == '^') {
            const std::size_t at = pos_;
            ++pos_;
            skip_ws();
            bool neg = false;
            if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) {
                neg = s_[pos_] == '-';
                ++pos_;
                skip_ws();
            }
            if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
                fail("expected an integer exponent");
            long e = 0;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
                e = e * 10 + (s_[pos_] - '0');
                if (e > 4096) fail_at("exponent too large", at);
                ++pos_;
            }
            std::string err;
            V out;
            if (!ops_.pow(b, neg ? -e : e, out, err)) fail_at(err, at);
            return out;
        }
        return b;
    }

    V atom() {
        skip_ws();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        const char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            V v = expr();
            if (!accept(')')) fail("expected ')'");
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            Integer n(std::string(s_.substr(start, pos_ - start)));
            return ops_.constant(Rational(n));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            if (!ops_.allows(c) || (pos_ + 1 < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_ + 1]))))
                fail(std::string("unknown identifier starting with '") + c + "'");
            ++pos_;
            return ops_.variable(c);
        }
        fail(std::string("unexpected character '") + c + "'");
    }

    std::string_view s_;
    Ops ops_;
    std::size_t pos_ = 0;
};

std::string coeff_term(const Rational& c, const std::string& mono, bool first) {
    // Renders c*mono with its sign folded into the joiner.
    std::string out;
    Rational a = abs(c);
    if (first)
        out = c < 0 ? "-" : "";
    else
        out = c < 0 ? " - " : " + ";
    if (mono.empty())
        out += a.get_str();
    else if (a == 1)
        out += mono;
    else
        out += a.get_str() + "*" + mono;
    return out;
}

std::string power_str(char v, unsigned e) {
    if (e == 0) return "";
    std::string s(1, v);
    if (e > 1) s += "^" + std::to_string(e);
    return s;
}

// Polynomial with rational coefficients c_i = scale * f_i, descending order.
std::string scaled_poly(const IntPoly& f, const Rational& scale, char var) {
    if (f.is_zero() || scale == 0) return "0";
    std::string out;
    bool first = true;
    for (int i = f.degree(); i >= 0; --i) {
        const Integer& c = f.coeffs()[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        Rational q = scale * Rational(c);
        q.canonicalize();
        out += coeff_term(q, power_str(var, static_cast<unsigned>(i)), first);
        first = false;
    }
    return out;
}

std::size_t count_terms(const IntPoly& f) {
    std::size_t n = 0;
    for (const auto& c : f.coeffs()) n += c != 0;
    return n;
}

}  // namespace

RatFunc parse_ratfunc(std::string_view text, char var) {
    return Parser<RatFuncOps>(text, RatFuncOps{var}).parse();
}

BiPoly parse_bipoly(std::string_view text) {
    QPoly2 q = Parser<Poly2Ops>(text, Poly2Ops{}).parse();
    Integer l = 1;
    for (const auto& [k, v] : q.terms) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
    BiPoly b;
    for (const auto& [k, v] : q.terms) {
        Rational s = v * Rational(l);
        s.canonicalize();
        b.terms[k] = s.get_num();
    }
    return b;
}

HomPoly parse_form(std::string_view text) {
    BiPoly b = parse_bipoly(text);
    if (!b.is_homogeneous()) throw ParseError("polynomial is not homogeneous", 1, 1);
    return b.to_form();
}

std::string to_string(const IntPoly& f, char var) { return scaled_poly(f, Rational(1), var); }

std::string to_string(const RatFunc& f, char var) {
    if (f.is_zero()) return "0";
    if (f.den().degree() == 0) return scaled_poly(f.num(), f.scalar(), var);
    std::string n = scaled_poly(f.num(), f.scalar(), var);
    if (count_terms(f.num()) > 1 || f.scalar() != 1) n = "(" + n + ")";
    std::string d = scaled_poly(f.den(), Rational(1), var);
    if (count_terms(f.den()) > 1 || f.den().lc() != 1) d = "(" + d + ")";
    return n + "/" + d;
}

std::string to_string(const HomPoly& f) {
    if (f.is_zero()) return "0";
    std::string out;
    bool first = true;
    const unsigned n = f.degree();
    for (unsigned i = n + 1; i-- > 0;) {
        const Integer& c = f.coeff(i);
        if (c == 0) continue;
        std::string mono = power_str('x', i);
        const std::string ys = power_str('y', n - i);
        if (!ys.empty()) mono = mono.empty() ? ys : mono + "*" + ys;
        out += coeff_term(Rational(c), mono, first);
        first = false;
    }
    return out;
}

std::string to_string(const BiPoly& f) {
    if (f.is_zero()) return "0";
    std::string out;
    bool first = true;
    // descending total degree, then descending x power
    std::vector<std::pair<std::pair<unsigned, unsigned>, Integer>> terms(f.terms.begin(), f.terms.end());
    std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
        const unsigned da = a.first.first + a.first.second, db = b.first.first + b.first.second;
        if (da != db) return da > db;
        return a.first.first > b.first.first;
    });
    for (const auto& [e, c] : terms) {
        std::string mono = power_str('x', e.first);
        const std::string ys = power_str('y', e.second);
        if (!ys.empty()) mono = mono.empty() ? ys : mono + "*" + ys;
        out += coeff_term(Rational(c), mono, first);
        first = false;
    }
    return out;
}

}  // namespace rootnum
