#pragma once

#include <map>
#include <vector>

#include "canonform/multi_index.hpp"
#include "canonform/scalar.hpp"

namespace canonform {

class Matrix;

/// Homogeneous form of degree d in n variables.
///
/// Internally the actual monomial coefficients c(i)a(p;i) are stored; the
/// normalized coefficient a(p;i) is exposed through coeff(). The zero form keeps
/// its shape.
class Form {
  public:
    using Terms = std::map<MultiIndex, Scalar, GradLex>;

    Form() : n_(1), d_(0) {}
    Form(int n, int d);

    static Form constant(int n, const Scalar& c);
    /// The variable x_j (0-based).
    static Form variable(int n, int j);
    static Form monomial(const MultiIndex& i, const Scalar& c = 1);
    /// Build from normalized coefficients a(p;i).
    static Form from_normalized(int n, int d, const std::vector<std::pair<MultiIndex, Scalar>>& a);
    /// Build from the vector of normalized coefficients indexed by index_set(n,d).
    static Form from_vector(int n, int d, const std::vector<Scalar>& a);

    int n() const { return n_; }
    int d() const { return d_; }
    const Terms& terms() const { return raw_; }

    /// Actual coefficient of x^i.
    Scalar raw(const MultiIndex& i) const;
    /// Normalized coefficient a(p;i).
    Scalar coeff(const MultiIndex& i) const;
    /// Normalized coefficients in index_set order.
    std::vector<Scalar> to_vector() const;

    void set_raw(const MultiIndex& i, const Scalar& c);
    void add_raw(const MultiIndex& i, const Scalar& c);

    bool is_exact() const;
    /// Exact: identically zero. Approx: every normalized coefficient within tol.
    bool is_zero(double tol = kDefaultEps) const;
    /// Max |a(p;i)|.
    double norm() const;
    Form to_approx() const;
    /// Replace each approximate coefficient by its rational reconstruction; nullopt on failure.
    std::optional<Form> snapped(long max_den = 1000000, double tol = 1e-9) const;

    Form& operator+=(const Form& o);
    Form& operator-=(const Form& o);
    Form& operator*=(const Scalar& c);
    friend Form operator+(Form a, const Form& b) { return a += b; }
    friend Form operator-(Form a, const Form& b) { return a -= b; }
    friend Form operator-(const Form& a);
    friend Form operator*(Form a, const Scalar& c) { return a *= c; }
    friend Form operator*(const Scalar& c, Form a) { return a *= c; }
    friend Form operator*(const Form& a, const Form& b);

    Form pow(int k) const;
    /// Partial derivative with respect to x_j (0-based).
    Form derivative(int j) const;
    Scalar evaluate(const std::vector<Scalar>& point) const;
    /// Replace x_i by images[i]; all images share one shape.
    Form compose(const std::vector<Form>& images) const;
    /// p(Mx): x_i -> sum_j M(i,j) x_j.
    Form substitute(const Matrix& M) const;
    /// Same polynomial viewed in m >= n variables (new variables appended).
    Form extend(int m) const;
    /// Variables listed in `keep` become x_0..x_{k-1}; requires the form not to involve others.
    Form restrict_to(const std::vector<int>& keep) const;
    /// True if x_j does not appear.
    bool free_of(int j) const;

    /// Exact equality when both exact; otherwise coefficientwise within eps * max(1, norms).
    bool equals(const Form& o, double eps = kDefaultEps) const;

  private:
    int n_;
    int d_;
    Terms raw_;
};

/// Any i in I(n,d) with p(i) != 0, scanning graded-lex order.
MultiIndex biermann_point(const Form& p);

/// Convenience for LinearForm-like construction: sum_j a[j] x_j.
Form linear(const std::vector<Scalar>& a);

}  // namespace canonform
