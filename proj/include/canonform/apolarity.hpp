#pragma once

#include <vector>

#include "canonform/form.hpp"
#include "canonform/matrix.hpp"

namespace canonform {

/// [p, q] = sum c(i) a(p;i) a(q;i)
Scalar pair(const Form& p, const Form& q);

/// f(D)p, the differential operator obtained by replacing x_j with d/dx_j.
Form apply_diff(const Form& f, const Form& p);

/// Catalecticant A_r(p) of a binary form: entry (m, i) = a_{i+m}.
struct HankelMatrix {
    int r = 0;
    Matrix entries;
};

HankelMatrix hankel(const Form& p, int r);

/// h = sum c_t x^(r-t) y^t for a vector c of length r+1.
Form hankel_form(const std::vector<Scalar>& c);

}  // namespace canonform
