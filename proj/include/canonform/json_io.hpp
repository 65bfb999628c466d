#pragma once

#include <json.hpp>

#include "canonform/decomposition.hpp"
#include "canonform/form.hpp"
#include "canonform/matrix.hpp"

namespace canonform {

using json = nlohmann::ordered_json;

/// {"re": "p/q", "im": "p/q"} for exact values; approximate values carry "approx": true
/// and 17 significant digits.
json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const json& j);

/// {n, d, coeffs: [{idx, re, im}]} storing a(p;i).
json form_to_json(const Form& p);
Form form_from_json(const json& j);

json matrix_to_json(const Matrix& M);
json decomposition_to_json(const Decomposition& D);
Decomposition decomposition_from_json(const json& j);

}  // namespace canonform
