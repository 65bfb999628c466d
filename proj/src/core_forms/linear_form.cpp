#include "canonform/linear_form.hpp"

#include "canonform/error.hpp"
#include "canonform/matrix.hpp"

namespace canonform {

LinearForm LinearForm::from_form(const Form& f) {
    if (f.d() != 1) throw Error(ErrorKind::ShapeMismatch, "linear form needs degree 1");
    LinearForm l;
    for (int j = 0; j < f.n(); ++j) {
        MultiIndex i(f.n(), 0);
        i[j] = 1;
        l.alpha.push_back(f.raw(i));
    }
    return l;
}

Form LinearForm::power(int d) const {
    // Binomial expansion via the multinomial theorem keeps this linear in the output size.
    Form f(n(), d);
    for (const auto& i : index_set(n(), d)) {
        Scalar c = Scalar(multinomial(i));
        for (int j = 0; j < n() && !c.is_zero(0.0); ++j)
            if (i[j]) c *= alpha[j].pow(i[j]);
        f.add_raw(i, c);
    }
    return f;
}

Scalar LinearForm::evaluate(const std::vector<Scalar>& x) const {
    if (x.size() != alpha.size()) throw Error(ErrorKind::ShapeMismatch, "linear form evaluation");
    Scalar s = 0;
    for (size_t j = 0; j < x.size(); ++j) s += alpha[j] * x[j];
    return s;
}

bool LinearForm::is_zero(double tol) const {
    for (const auto& a : alpha)
        if (!a.is_zero(tol)) return false;
    return true;
}

LinearForm LinearForm::scaled(const Scalar& c) const {
    LinearForm l = *this;
    for (auto& a : l.alpha) a *= c;
    return l;
}

bool proportional(const LinearForm& a, const LinearForm& b, double eps) {
    Matrix M(2, a.n());
    for (int j = 0; j < a.n(); ++j) {
        M(0, j) = a.alpha[j];
        M(1, j) = b.alpha[j];
    }
    return rank(M, eps) < 2;
}

}  // namespace canonform
