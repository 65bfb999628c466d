#pragma once

#include <vector>

#include "canonform/canonicity.hpp"

namespace canonform::detail {

/// Index of the coordinate solved for in c . t = 0 (first nonzero among c4, c2, c3, c1), or -1.
int hyperplane_pivot(const std::vector<Scalar>& c);
ParamMap hyperplane_map(const std::vector<Scalar>& c);

}  // namespace canonform::detail
