#include "canonform/scalar.hpp"

#include <cmath>
#include <sstream>

namespace canonform {

GaussRat operator+(const GaussRat& a, const GaussRat& b) { return {a.re + b.re, a.im + b.im}; }
GaussRat operator-(const GaussRat& a, const GaussRat& b) { return {a.re - b.re, a.im - b.im}; }
GaussRat operator*(const GaussRat& a, const GaussRat& b) {
    if (sgn(a.im) == 0 && sgn(b.im) == 0) return {a.re * b.re, 0};
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
GaussRat operator/(const GaussRat& a, const GaussRat& b) {
    if (sgn(b.im) == 0) return {a.re / b.re, a.im / b.re};
    mpq_class n = b.norm();
    GaussRat c = a * b.conj();
    return {c.re / n, c.im / n};
}
GaussRat operator-(const GaussRat& a) { return {-a.re, -a.im}; }
bool operator==(const GaussRat& a, const GaussRat& b) { return a.re == b.re && a.im == b.im; }

Scalar Scalar::rational(long num, long den) {
    mpq_class q(num, den);
    q.canonicalize();
    return Scalar(q);
}

cplx Scalar::to_complex() const {
    if (auto* g = std::get_if<GaussRat>(&v_)) return {g->re.get_d(), g->im.get_d()};
    return std::get<cplx>(v_);
}

bool Scalar::is_zero(double tol) const {
    if (auto* g = std::get_if<GaussRat>(&v_)) return g->is_zero();
    return std::abs(std::get<cplx>(v_)) <= tol;
}

bool Scalar::is_real() const {
    if (auto* g = std::get_if<GaussRat>(&v_)) return sgn(g->im) == 0;
    return std::get<cplx>(v_).imag() == 0.0;
}

Scalar Scalar::conj() const {
    if (auto* g = std::get_if<GaussRat>(&v_)) return Scalar(g->conj());
    return Scalar(std::conj(std::get<cplx>(v_)));
}

Scalar Scalar::inverse() const { return Scalar(1) / *this; }

Scalar Scalar::pow(long k) const {
    if (k < 0) return inverse().pow(-k);
    Scalar r(1), b = *this;
    while (k) {
        if (k & 1) r *= b;
        k >>= 1;
        if (k) b *= b;
    }
    return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    if (is_exact() && o.is_exact())
        v_ = exact() + o.exact();
    else
        v_ = to_complex() + o.to_complex();
    return *this;
}
Scalar& Scalar::operator-=(const Scalar& o) {
    if (is_exact() && o.is_exact())
        v_ = exact() - o.exact();
    else
        v_ = to_complex() - o.to_complex();
    return *this;
}
Scalar& Scalar::operator*=(const Scalar& o) {
    if (is_exact() && o.is_exact())
        v_ = exact() * o.exact();
    else
        v_ = to_complex() * o.to_complex();
    return *this;
}
Scalar& Scalar::operator/=(const Scalar& o) {
    if (is_exact() && o.is_exact()) {
        if (o.exact().is_zero()) throw std::domain_error("division by exact zero");
        v_ = exact() / o.exact();
    } else {
        v_ = to_complex() / o.to_complex();
    }
    return *this;
}
Scalar operator-(const Scalar& a) {
    if (a.is_exact()) return Scalar(-a.exact());
    return Scalar(-a.to_complex());
}

bool Scalar::equals(const Scalar& o, double eps) const {
    if (is_exact() && o.is_exact()) return exact() == o.exact();
    return near(to_complex(), o.to_complex(), eps);
}

static std::string q_str(const mpq_class& q) { return q.get_str(); }

std::string Scalar::to_string() const {
    if (is_exact()) {
        const GaussRat& g = exact();
        if (sgn(g.im) == 0) return q_str(g.re);
        if (sgn(g.re) == 0) return q_str(g.im) + "*i";
        std::string s = q_str(g.re);
        s += sgn(g.im) > 0 ? "+" : "-";
        s += q_str(mpq_class(::abs(g.im))) + "*i";
        return s;
    }
    cplx z = to_complex();
    char buf[64];
    if (z.imag() == 0.0) {
        std::snprintf(buf, sizeof buf, "%.15g", z.real());
    } else if (z.real() == 0.0) {
        std::snprintf(buf, sizeof buf, "%.15g*i", z.imag());
    } else {
        std::snprintf(buf, sizeof buf, "%.15g%+.15g*i", z.real(), z.imag());
    }
    return buf;
}

static std::optional<mpq_class> rational_sqrt(const mpq_class& q) {
    if (sgn(q) < 0) return std::nullopt;
    mpz_class n = q.get_num(), d = q.get_den();
    if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return std::nullopt;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
    mpq_class r(rn, rd);
    r.canonicalize();
    return r;
}

std::optional<GaussRat> exact_sqrt(const GaussRat& z) {
    if (sgn(z.im) == 0) {
        if (sgn(z.re) >= 0) {
            if (auto r = rational_sqrt(z.re)) return GaussRat(*r, 0);
            return std::nullopt;
        }
        if (auto r = rational_sqrt(-z.re)) return GaussRat(0, *r);
        return std::nullopt;
    }
    auto m = rational_sqrt(z.norm());
    if (!m) return std::nullopt;
    mpq_class x2 = (z.re + *m) / 2;
    auto x = rational_sqrt(x2);
    if (!x || sgn(*x) == 0) return std::nullopt;
    mpq_class y = z.im / (2 * *x);
    return GaussRat(*x, y);
}

Scalar sqrt(const Scalar& z) {
    if (z.is_exact()) {
        if (auto r = exact_sqrt(z.exact())) return Scalar(*r);
    }
    return Scalar(std::sqrt(z.to_complex()));
}

Scalar root(const Scalar& z, int k) {
    if (k == 1) return z;
    if (k == 2) return sqrt(z);
    cplx w = z.to_complex();
    if (w == cplx(0, 0)) return Scalar(cplx(0, 0));
    return Scalar(std::pow(w, 1.0 / k));
}

mpq_class snap_real(double x, long max_den) {
    if (!std::isfinite(x)) return 0;
    bool neg = x < 0;
    double v = std::fabs(x);
    // Continued fraction convergents p/q.
    mpz_class p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    double r = v;
    for (int it = 0; it < 64; ++it) {
        double a = std::floor(r);
        if (a > 1e15) break;
        mpz_class ai(a);
        mpz_class p2 = ai * p1 + p0, q2 = ai * q1 + q0;
        if (q2 > max_den) break;
        p0 = p1; q0 = q1; p1 = p2; q1 = q2;
        double frac = r - a;
        if (frac < 1e-15) break;
        r = 1.0 / frac;
    }
    if (q1 == 0) return 0;
    mpq_class out(p1, q1);
    out.canonicalize();
    return neg ? mpq_class(-out) : out;
}

std::optional<Scalar> snap(const Scalar& z, long max_den, double tol) {
    if (z.is_exact()) return z;
    cplx w = z.to_complex();
    Scalar s = Scalar::gauss(snap_real(w.real(), max_den), snap_real(w.imag(), max_den));
    if (std::abs(s.to_complex() - w) > tol * std::max(1.0, std::abs(w))) return std::nullopt;
    return s;
}

bool near(cplx a, cplx b, double eps) {
    double scale = std::max({1.0, std::abs(a), std::abs(b)});
    return std::abs(a - b) <= eps * scale;
}

bool near(const Scalar& a, const Scalar& b, double eps) {
    if (a.is_exact() && b.is_exact()) return a.exact() == b.exact();
    return near(a.to_complex(), b.to_complex(), eps);
}

mpz_class binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

mpz_class factorial(long n) {
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

}  // namespace canonform
