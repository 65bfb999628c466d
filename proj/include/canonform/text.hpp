#pragma once

#include <string>

#include "canonform/decomposition.hpp"
#include "canonform/form.hpp"
#include "canonform/linear_form.hpp"

namespace canonform {

/// Parse a homogeneous polynomial such as `2*x^3 + 3*x^2*y - (1+2*i)/3*x*y^2`.
/// Variables x, y, z alias x1, x2, x3. Decimal literals produce approximate
/// coefficients. `n` forces the variable count (otherwise inferred, at least `min_n`).
/// The zero polynomial needs `d`.
Form parse_form(const std::string& text, int n = -1, int d = -1, int min_n = 1);

/// Scalar literal or constant expression, e.g. `-7/2`, `(1+i)/3`, `0.25`.
Scalar parse_scalar(const std::string& text);

std::string format_scalar(const Scalar& s);
std::string format_form(const Form& p);
std::string format_linear(const LinearForm& l);
std::string format_decomposition(const Decomposition& D);

}  // namespace canonform
