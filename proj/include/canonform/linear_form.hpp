#pragma once

#include <vector>

#include "canonform/form.hpp"

namespace canonform {

/// alpha_1 x_1 + ... + alpha_n x_n
struct LinearForm {
    std::vector<Scalar> alpha;

    LinearForm() = default;
    explicit LinearForm(std::vector<Scalar> a) : alpha(std::move(a)) {}
    LinearForm(std::initializer_list<Scalar> a) : alpha(a) {}
    static LinearForm from_form(const Form& f);

    int n() const { return static_cast<int>(alpha.size()); }
    Form form() const { return linear(alpha); }
    Form power(int d) const;
    Scalar evaluate(const std::vector<Scalar>& x) const;
    bool is_zero(double tol = kDefaultEps) const;
    LinearForm scaled(const Scalar& c) const;
};

/// Whether two binary (or n-ary) linear forms are proportional.
bool proportional(const LinearForm& a, const LinearForm& b, double eps = kDefaultEps);

}  // namespace canonform
