#pragma once

#include <vector>

#include "canonform/decomposition.hpp"
#include "canonform/linear_form.hpp"

namespace canonform::detail {

/// Drop monomials involving any of `vars`; they must be negligible (exactly zero for exact data).
/// Returns false if a dropped coefficient exceeds tol.
bool drop_vars(Form& q, const std::vector<int>& vars, double tol);

/// Embed a linear form in x_offset.. of an n-variable space.
LinearForm embed(const LinearForm& l, int n, int offset);

/// Relative tolerance for a residual of p.
double residual_tol(const Form& p, double eps);

}  // namespace canonform::detail
