#pragma once

#include <gmpxx.h>

#include <complex>
#include <optional>
#include <string>
#include <variant>

namespace canonform {

using cplx = std::complex<double>;

inline constexpr double kDefaultEps = 1e-9;

/// Runtime tolerance context for the approximate backend.
struct Tolerance {
    double eps = kDefaultEps;
};

/// Gaussian rational re + i*im.
struct GaussRat {
    mpq_class re{0};
    mpq_class im{0};

    GaussRat() = default;
    GaussRat(long v) : re(v) {}
    GaussRat(mpq_class r, mpq_class i = 0) : re(std::move(r)), im(std::move(i)) {}

    bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
    GaussRat conj() const { return {re, -im}; }
    mpq_class norm() const { return re * re + im * im; }
};

GaussRat operator+(const GaussRat& a, const GaussRat& b);
GaussRat operator-(const GaussRat& a, const GaussRat& b);
GaussRat operator*(const GaussRat& a, const GaussRat& b);
GaussRat operator/(const GaussRat& a, const GaussRat& b);
GaussRat operator-(const GaussRat& a);
bool operator==(const GaussRat& a, const GaussRat& b);

/// Tagged value: exact Gaussian rational or complex double.
/// Mixing the two promotes to approximate.
class Scalar {
  public:
    Scalar() : v_(GaussRat{}) {}
    Scalar(int x) : v_(GaussRat(static_cast<long>(x))) {}
    Scalar(long x) : v_(GaussRat(x)) {}
    Scalar(long long x) : v_(GaussRat(mpq_class(std::to_string(x)))) {}
    Scalar(const mpq_class& x) : v_(GaussRat(x)) {}
    Scalar(const mpz_class& x) : v_(GaussRat(mpq_class(x))) {}
    Scalar(GaussRat g) : v_(std::move(g)) {}
    Scalar(double x) : v_(cplx(x, 0.0)) {}
    Scalar(cplx z) : v_(z) {}

    static Scalar rational(long num, long den = 1);
    static Scalar gauss(const mpq_class& re, const mpq_class& im) { return Scalar(GaussRat(re, im)); }
    static Scalar i() { return gauss(0, 1); }

    bool is_exact() const { return std::holds_alternative<GaussRat>(v_); }
    const GaussRat& exact() const { return std::get<GaussRat>(v_); }
    cplx to_complex() const;
    Scalar to_approx() const { return Scalar(to_complex()); }

    // Exact: identically zero. Approx: |z| <= tol.
    bool is_zero(double tol = kDefaultEps) const;
    bool is_real() const;
    double abs() const { return std::abs(to_complex()); }

    Scalar conj() const;
    Scalar inverse() const;
    Scalar pow(long k) const;

    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    friend Scalar operator-(const Scalar& a);

    // Exact equality when both are exact; otherwise approximate with relative tolerance.
    bool equals(const Scalar& o, double eps = kDefaultEps) const;
    friend bool operator==(const Scalar& a, const Scalar& b) { return a.equals(b); }

    std::string to_string() const;

  private:
    std::variant<GaussRat, cplx> v_;
};

/// Principal square root; exact when the argument is a square in Q(i).
Scalar sqrt(const Scalar& z);
/// Exact square root in Q(i) if one exists.
std::optional<GaussRat> exact_sqrt(const GaussRat& z);
/// Principal k-th root (approximate unless k == 1, or k == 2 and exact).
Scalar root(const Scalar& z, int k);

/// Best rational approximation with denominator <= max_den.
mpq_class snap_real(double x, long max_den = 1000000);
/// Snap a complex value to a Gaussian rational; nullopt if the error exceeds tol.
std::optional<Scalar> snap(const Scalar& z, long max_den = 1000000, double tol = 1e-9);

/// |a - b| <= eps * max(1, |a|, |b|)
bool near(const Scalar& a, const Scalar& b, double eps = kDefaultEps);
bool near(cplx a, cplx b, double eps = kDefaultEps);

mpz_class binomial(long n, long k);
mpz_class factorial(long n);

}  // namespace canonform
