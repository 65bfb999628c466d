#include "canonform/text.hpp"

#include <cctype>
#include <map>

#include "canonform/error.hpp"

namespace canonform {

namespace {

// Inhomogeneous polynomial used while parsing.
using Poly = std::map<MultiIndex, Scalar>;

struct Parser {
    const std::string& s;
    size_t pos = 0;
    int n;

    [[noreturn]] void fail(const std::string& msg) const {
        throw Error(ErrorKind::Parse, msg + " at offset " + std::to_string(pos) + " in \"" + s + "\"");
    }

    void skip() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(char c) {
        skip();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    Poly constant(const Scalar& c) const {
        Poly p;
        p[MultiIndex(n, 0)] = c;
        return p;
    }

    static void add_into(Poly& a, const Poly& b, bool negate) {
        for (const auto& [k, v] : b) {
            auto it = a.find(k);
            Scalar w = negate ? -v : v;
            if (it == a.end())
                a[k] = w;
            else
                it->second += w;
        }
    }

    Poly mul(const Poly& a, const Poly& b) const {
        Poly c;
        for (const auto& [i, u] : a)
            for (const auto& [j, v] : b) {
                MultiIndex k(n);
                for (int t = 0; t < n; ++t) k[t] = i[t] + j[t];
                auto it = c.find(k);
                if (it == c.end())
                    c[k] = u * v;
                else
                    it->second += u * v;
            }
        return c;
    }

    Poly expr() {
        Poly acc;
        bool first = true;
        for (;;) {
            skip();
            bool neg = false;
            if (eat('+')) {
            } else if (eat('-')) {
                neg = true;
            } else if (!first) {
                break;
            }
            Poly t = term();
            add_into(acc, t, neg);
            first = false;
        }
        return acc;
    }

    Poly term() {
        Poly acc = unary();
        for (;;) {
            if (eat('*')) {
                acc = mul(acc, unary());
            } else if (eat('/')) {
                Poly den = unary();
                if (den.size() != 1 || degree(den.begin()->first) != 0) fail("division by a non-constant");
                Scalar c = den.begin()->second;
                if (c.is_zero(0.0)) fail("division by zero");
                for (auto& [k, v] : acc) v /= c;
            } else {
                break;
            }
        }
        return acc;
    }

    Poly unary() {
        if (eat('-')) {
            Poly p = unary();
            for (auto& [k, v] : p) v = -v;
            return p;
        }
        if (eat('+')) return unary();
        Poly base = primary();
        if (eat('^')) {
            skip();
            size_t start = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            if (start == pos) fail("expected a non-negative integer exponent");
            int e = std::stoi(s.substr(start, pos - start));
            Poly r = constant(1);
            for (int k = 0; k < e; ++k) r = mul(r, base);
            return r;
        }
        return base;
    }

    Poly primary() {
        skip();
        if (pos >= s.size()) fail("unexpected end of input");
        char c = s[pos];
        if (c == '(') {
            ++pos;
            Poly p = expr();
            if (!eat(')')) fail("expected ')'");
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
        if (c == 'i' && (pos + 1 >= s.size() || !std::isalnum(static_cast<unsigned char>(s[pos + 1])))) {
            ++pos;
            return constant(Scalar::i());
        }
        int v = variable_at(s, pos, &pos);
        if (v < 0) fail("unexpected character");
        MultiIndex k(n, 0);
        k[v] = 1;
        Poly p;
        p[k] = 1;
        return p;
    }

    Poly number() {
        size_t start = pos;
        bool decimal = false;
        while (pos < s.size() && (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '.')) {
            if (s[pos] == '.') decimal = true;
            ++pos;
        }
        if (pos < s.size() && (s[pos] == 'e' || s[pos] == 'E')) {
            size_t save = pos;
            ++pos;
            if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) ++pos;
            if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
                decimal = true;
                while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            } else {
                pos = save;
            }
        }
        std::string lit = s.substr(start, pos - start);
        if (decimal) return constant(Scalar(std::stod(lit)));
        return constant(Scalar(mpq_class(mpz_class(lit))));
    }

    // Returns the 0-based variable index starting at p, or -1.
    static int variable_at(const std::string& s, size_t p, size_t* end) {
        if (p >= s.size()) return -1;
        char c = s[p];
        if (c == 'x' && p + 1 < s.size() && std::isdigit(static_cast<unsigned char>(s[p + 1]))) {
            size_t q = p + 1;
            while (q < s.size() && std::isdigit(static_cast<unsigned char>(s[q]))) ++q;
            int k = std::stoi(s.substr(p + 1, q - p - 1));
            if (k < 1) return -1;
            if (end) *end = q;
            return k - 1;
        }
        if (c == 'x' || c == 'y' || c == 'z') {
            if (p + 1 < s.size() && std::isalnum(static_cast<unsigned char>(s[p + 1]))) return -1;
            if (end) *end = p + 1;
            return c - 'x';
        }
        return -1;
    }
};

int infer_variables(const std::string& s) {
    int n = 0;
    for (size_t p = 0; p < s.size(); ++p) {
        if (p > 0 && std::isalnum(static_cast<unsigned char>(s[p - 1]))) continue;
        size_t end;
        int v = Parser::variable_at(s, p, &end);
        if (v >= 0) n = std::max(n, v + 1);
    }
    return n;
}

}  // namespace

Form parse_form(const std::string& text, int n, int d, int min_n) {
    int inferred = infer_variables(text);
    if (n < 0) n = std::max(inferred, std::max(min_n, 1));
    if (inferred > n) throw Error(ErrorKind::Parse, "more variables than the declared count");
    Parser P{text, 0, n};
    Poly poly = P.expr();
    P.skip();
    if (P.pos != text.size()) P.fail("trailing input");
    int deg = -1;
    for (const auto& [k, v] : poly) {
        if (v.is_exact() && v.exact().is_zero()) continue;
        int dk = degree(k);
        if (deg >= 0 && dk != deg) throw Error(ErrorKind::Parse, "polynomial is not homogeneous");
        deg = dk;
    }
    if (deg < 0) {
        if (d < 0) d = 0;
        return Form(n, d);
    }
    if (d >= 0 && d != deg) throw Error(ErrorKind::ShapeMismatch, "degree differs from the declared degree");
    Form f(n, deg);
    for (const auto& [k, v] : poly) f.add_raw(k, v);
    return f;
}

Scalar parse_scalar(const std::string& text) {
    Form f = parse_form(text, 1, 0);
    return f.raw({0});
}

static std::string fmt_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.15g", x);
    return buf;
}

std::string format_scalar(const Scalar& s) {
    if (s.is_exact()) {
        const GaussRat& g = s.exact();
        if (sgn(g.im) == 0) return g.re.get_str();
        if (sgn(g.re) == 0) {
            if (g.im == 1) return "i";
            if (g.im == -1) return "-i";
            return g.im.get_str() + "*i";
        }
        std::string out = "(" + g.re.get_str() + (sgn(g.im) > 0 ? "+" : "-");
        mpq_class a = abs(g.im);
        out += (a == 1 ? std::string("i") : a.get_str() + "*i") + ")";
        return out;
    }
    cplx z = s.to_complex();
    if (z.imag() == 0.0) return fmt_double(z.real());
    if (z.real() == 0.0) return fmt_double(z.imag()) + "*i";
    std::string im = fmt_double(std::fabs(z.imag()));
    return "(" + fmt_double(z.real()) + (z.imag() > 0 ? "+" : "-") + im + "*i)";
}

static std::string var_name(int n, int j) {
    if (n <= 3) return std::string(1, static_cast<char>('x' + j));
    return "x" + std::to_string(j + 1);
}

static std::string monomial_text(const MultiIndex& i) {
    int n = static_cast<int>(i.size());
    std::string out;
    for (int j = 0; j < n; ++j) {
        if (!i[j]) continue;
        if (!out.empty()) out += "*";
        out += var_name(n, j);
        if (i[j] > 1) out += "^" + std::to_string(i[j]);
    }
    return out;
}

// Splits a coefficient into a sign and a magnitude string when it is real or purely imaginary.
static bool negative_real(const Scalar& c) {
    if (c.is_exact()) {
        const GaussRat& g = c.exact();
        return sgn(g.re) < 0 ? sgn(g.im) == 0 : sgn(g.re) == 0 && sgn(g.im) < 0;
    }
    cplx z = c.to_complex();
    return z.imag() == 0.0 ? z.real() < 0 : z.real() == 0.0 && z.imag() < 0;
}

static bool is_one(const Scalar& c) {
    if (c.is_exact()) return c.exact() == GaussRat(1);
    return c.to_complex() == cplx(1, 0);
}

static std::string format_terms(const Form& p, bool compact) {
    if (p.terms().empty()) return "0";
    const char* minus = compact ? "-" : " - ";
    const char* plus = compact ? "+" : " + ";
    std::string out;
    bool first = true;
    for (const auto& [i, c0] : p.terms()) {
        Scalar c = c0;
        bool neg = negative_real(c);
        if (neg) c = -c;
        if (first)
            out += neg ? "-" : "";
        else
            out += neg ? minus : plus;
        std::string mono = monomial_text(i);
        if (mono.empty())
            out += format_scalar(c);
        else if (is_one(c))
            out += mono;
        else
            out += format_scalar(c) + "*" + mono;
        first = false;
    }
    return out;
}

std::string format_form(const Form& p) { return format_terms(p, false); }

std::string format_linear(const LinearForm& l) { return format_form(l.form()); }

std::string format_decomposition(const Decomposition& D) {
    std::string out;
    bool first = true;
    for (const auto& t : D.terms) {
        Scalar c = t.multiplier;
        bool neg = negative_real(c);
        if (neg) c = -c;
        if (first)
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        std::string base = format_terms(t.base, true);
        // a bare monomial needs no parentheses unless it is a product raised to a power
        bool simple = t.base.terms().size() == 1 && is_one(t.base.terms().begin()->second) &&
                      (t.power == 1 || t.base.d() == 1);
        if (!simple) base = "(" + base + ")";
        if (t.power > 1) base += "^" + std::to_string(t.power);
        if (is_one(c))
            out += base;
        else
            out += format_scalar(c) + "*" + base;
        first = false;
    }
    if (D.residual && !D.residual->terms().empty()) {
        out += first ? "" : " + ";
        out += "(" + format_form(*D.residual) + ")";
        first = false;
    }
    if (first) out = "0";
    return out;
}

}  // namespace canonform
