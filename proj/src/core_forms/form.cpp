#include "canonform/form.hpp"

#include "canonform/error.hpp"
#include "canonform/matrix.hpp"

namespace canonform {

Form::Form(int n, int d) : n_(n), d_(d) {
    if (n < 1 || d < 0) throw Error(ErrorKind::BadShape, "form shape requires n >= 1 and d >= 0");
}

Form Form::constant(int n, const Scalar& c) {
    Form f(n, 0);
    f.set_raw(MultiIndex(n, 0), c);
    return f;
}

Form Form::variable(int n, int j) {
    Form f(n, 1);
    MultiIndex i(n, 0);
    i.at(j) = 1;
    f.set_raw(i, 1);
    return f;
}

Form Form::monomial(const MultiIndex& i, const Scalar& c) {
    Form f(static_cast<int>(i.size()), degree(i));
    f.set_raw(i, c);
    return f;
}

Form Form::from_normalized(int n, int d, const std::vector<std::pair<MultiIndex, Scalar>>& a) {
    Form f(n, d);
    for (const auto& [i, c] : a) {
        if (static_cast<int>(i.size()) != n || degree(i) != d) throw Error(ErrorKind::ShapeMismatch, "index shape");
        f.add_raw(i, c * Scalar(multinomial(i)));
    }
    return f;
}

Form Form::from_vector(int n, int d, const std::vector<Scalar>& a) {
    auto idx = index_set(n, d);
    if (idx.size() != a.size()) throw Error(ErrorKind::ShapeMismatch, "coefficient vector length");
    Form f(n, d);
    for (size_t k = 0; k < idx.size(); ++k) f.add_raw(idx[k], a[k] * Scalar(multinomial(idx[k])));
    return f;
}

Scalar Form::raw(const MultiIndex& i) const {
    auto it = raw_.find(i);
    return it == raw_.end() ? Scalar(0) : it->second;
}

Scalar Form::coeff(const MultiIndex& i) const {
    auto it = raw_.find(i);
    if (it == raw_.end()) return Scalar(0);
    return it->second / Scalar(multinomial(i));
}

std::vector<Scalar> Form::to_vector() const {
    std::vector<Scalar> v;
    for (const auto& i : index_set(n_, d_)) v.push_back(coeff(i));
    return v;
}

static bool exact_zero(const Scalar& c) { return c.is_exact() ? c.exact().is_zero() : c.to_complex() == cplx(0, 0); }

void Form::set_raw(const MultiIndex& i, const Scalar& c) {
    if (static_cast<int>(i.size()) != n_ || degree(i) != d_) throw Error(ErrorKind::ShapeMismatch, "index shape");
    if (exact_zero(c))
        raw_.erase(i);
    else
        raw_[i] = c;
}

void Form::add_raw(const MultiIndex& i, const Scalar& c) {
    if (exact_zero(c)) return;
    auto it = raw_.find(i);
    if (it == raw_.end()) {
        set_raw(i, c);
        return;
    }
    it->second += c;
    if (exact_zero(it->second)) raw_.erase(it);
}

bool Form::is_exact() const {
    for (const auto& [i, c] : raw_)
        if (!c.is_exact()) return false;
    return true;
}

bool Form::is_zero(double tol) const {
    for (const auto& [i, c] : raw_) {
        if (c.is_exact()) return false;
        if ((c / Scalar(multinomial(i))).abs() > tol) return false;
    }
    return true;
}

double Form::norm() const {
    double m = 0;
    for (const auto& [i, c] : raw_) m = std::max(m, c.abs() / multinomial(i).get_d());
    return m;
}

Form Form::to_approx() const {
    Form f(n_, d_);
    for (const auto& [i, c] : raw_) f.raw_[i] = c.to_approx();
    return f;
}

std::optional<Form> Form::snapped(long max_den, double tol) const {
    Form f(n_, d_);
    for (const auto& [i, c] : raw_) {
        Scalar a = c / Scalar(multinomial(i));
        auto s = snap(a, max_den, tol);
        if (!s) return std::nullopt;
        f.add_raw(i, *s * Scalar(multinomial(i)));
    }
    return f;
}

Form& Form::operator+=(const Form& o) {
    if (o.n_ != n_ || o.d_ != d_) throw Error(ErrorKind::ShapeMismatch, "form addition");
    for (const auto& [i, c] : o.raw_) add_raw(i, c);
    return *this;
}

Form& Form::operator-=(const Form& o) {
    if (o.n_ != n_ || o.d_ != d_) throw Error(ErrorKind::ShapeMismatch, "form subtraction");
    for (const auto& [i, c] : o.raw_) add_raw(i, -c);
    return *this;
}

Form& Form::operator*=(const Scalar& s) {
    if (exact_zero(s)) {
        raw_.clear();
        return *this;
    }
    for (auto& [i, c] : raw_) c *= s;
    return *this;
}

Form operator-(const Form& a) {
    Form f = a;
    for (auto& [i, c] : f.raw_) c = -c;
    return f;
}

Form operator*(const Form& a, const Form& b) {
    if (a.n_ != b.n_) throw Error(ErrorKind::ShapeMismatch, "form product");
    Form f(a.n_, a.d_ + b.d_);
    MultiIndex k(a.n_);
    for (const auto& [i, c] : a.raw_)
        for (const auto& [j, e] : b.raw_) {
            for (int t = 0; t < a.n_; ++t) k[t] = i[t] + j[t];
            f.add_raw(k, c * e);
        }
    return f;
}

Form Form::pow(int k) const {
    if (k < 0) throw Error(ErrorKind::BadShape, "negative power of a form");
    Form r = constant(n_, 1);
    Form b = *this;
    while (k) {
        if (k & 1) r = r * b;
        k >>= 1;
        if (k) b = b * b;
    }
    return r;
}

Form Form::derivative(int j) const {
    if (j < 0 || j >= n_) throw Error(ErrorKind::ShapeMismatch, "derivative variable out of range");
    Form f(n_, std::max(d_ - 1, 0));
    if (d_ == 0) return f;
    for (const auto& [i, c] : raw_) {
        if (i[j] == 0) continue;
        MultiIndex k = i;
        k[j] -= 1;
        f.add_raw(k, c * Scalar(i[j]));
    }
    return f;
}

Scalar Form::evaluate(const std::vector<Scalar>& point) const {
    if (static_cast<int>(point.size()) != n_) throw Error(ErrorKind::ShapeMismatch, "evaluation point length");
    // Power tables avoid recomputing x_j^k per monomial.
    std::vector<std::vector<Scalar>> pw(n_);
    for (int j = 0; j < n_; ++j) {
        pw[j].resize(d_ + 1);
        pw[j][0] = 1;
        for (int k = 1; k <= d_; ++k) pw[j][k] = pw[j][k - 1] * point[j];
    }
    Scalar s = 0;
    for (const auto& [i, c] : raw_) {
        Scalar t = c;
        for (int j = 0; j < n_; ++j)
            if (i[j]) t *= pw[j][i[j]];
        s += t;
    }
    return s;
}

Form Form::compose(const std::vector<Form>& images) const {
    if (static_cast<int>(images.size()) != n_) throw Error(ErrorKind::ShapeMismatch, "compose arity");
    int m = images[0].n();
    int e = images[0].d();
    for (const auto& g : images)
        if (g.n() != m || g.d() != e) throw Error(ErrorKind::ShapeMismatch, "compose image shapes");
    std::vector<std::vector<Form>> pw(n_);
    for (int j = 0; j < n_; ++j) {
        pw[j].push_back(constant(m, 1));
        for (int k = 1; k <= d_; ++k) pw[j].push_back(pw[j].back() * images[j]);
    }
    Form out(m, e * d_);
    for (const auto& [i, c] : raw_) {
        Form t = constant(m, c);
        for (int j = 0; j < n_; ++j)
            if (i[j]) t = t * pw[j][i[j]];
        out += t;
    }
    return out;
}

Form Form::substitute(const Matrix& M) const {
    if (M.rows() != n_) throw Error(ErrorKind::ShapeMismatch, "substitution matrix rows");
    std::vector<Form> images;
    for (int i = 0; i < n_; ++i) images.push_back(linear(M.row(i)));
    return compose(images);
}

Form Form::extend(int m) const {
    if (m < n_) throw Error(ErrorKind::ShapeMismatch, "extend to fewer variables");
    Form f(m, d_);
    for (const auto& [i, c] : raw_) {
        MultiIndex k = i;
        k.resize(m, 0);
        f.raw_[k] = c;
    }
    return f;
}

Form Form::restrict_to(const std::vector<int>& keep) const {
    Form f(static_cast<int>(keep.size()), d_);
    for (const auto& [i, c] : raw_) {
        MultiIndex k;
        int used = 0;
        for (int j : keep) {
            k.push_back(i.at(j));
            used += i[j];
        }
        if (used != d_) throw Error(ErrorKind::ShapeMismatch, "form involves dropped variables");
        f.add_raw(k, c);
    }
    return f;
}

bool Form::free_of(int j) const {
    for (const auto& [i, c] : raw_)
        if (i.at(j) != 0) return false;
    return true;
}

bool Form::equals(const Form& o, double eps) const {
    if (o.n_ != n_ || o.d_ != d_) return false;
    if (is_exact() && o.is_exact()) return raw_.size() == o.raw_.size() && (*this - o).raw_.empty();
    double scale = std::max({1.0, norm(), o.norm()});
    return (*this - o).to_approx().is_zero(eps * scale);
}

MultiIndex biermann_point(const Form& p) {
    bool exact = p.is_exact();
    for (const auto& i : index_set(p.n(), p.d())) {
        std::vector<Scalar> pt(i.begin(), i.end());
        Scalar v = p.evaluate(pt);
        if (!v.is_zero(exact ? 0.0 : kDefaultEps * std::max(1.0, p.norm()))) return i;
    }
    throw Error(ErrorKind::ZeroForm, "biermann_point of the zero form");
}

Form linear(const std::vector<Scalar>& a) {
    int n = static_cast<int>(a.size());
    Form f(n, 1);
    for (int j = 0; j < n; ++j) {
        MultiIndex i(n, 0);
        i[j] = 1;
        f.add_raw(i, a[j]);
    }
    return f;
}

}  // namespace canonform
