#pragma once

#include <utility>
#include <vector>

#include "canonform/decomposition.hpp"
#include "canonform/linear_form.hpp"
#include "canonform/matrix.hpp"

namespace canonform {

/// Rows whose squares sum to a quadratic; row k involves only x_k..x_n.
struct TriangularSquares {
    std::vector<LinearForm> rows;

    Form sum_of_squares(int n) const;
};

/// Completion of squares without pivoting. A stage whose pivot row is identically
/// zero yields a zero row; a zero pivot with a nonzero row raises PivotZero.
TriangularSquares uppertri(const Form& p, double eps = kDefaultEps);

/// Symmetric matrix M with p = x^T M x.
Matrix quadratic_matrix(const Form& p);

/// f = sum L_i^2 and g = sum c_i L_i^2.
struct PencilDiag {
    std::vector<LinearForm> L;
    std::vector<Scalar> c;
};

PencilDiag simultaneous_diagonalize(const Form& f, const Form& g, double eps = kDefaultEps);

/// n cubes plus a residual free of x_1 and x_2.
struct ReichsteinStep {
    Decomposition cubes;
    Form q;
};

ReichsteinStep reichstein_step(const Form& p, double eps = kDefaultEps);
Decomposition reichstein_full(const Form& p, double eps = kDefaultEps);

/// binom(n+1, 2) cubes; the cube built at stage k involves x_j..x_k.
Decomposition slinky(const Form& p, double eps = kDefaultEps);

/// At most n(n+1)/2 cubes for any nonzero cubic.
Decomposition slowpoke(const Form& p, double eps = kDefaultEps);

/// The m+1 forms l_{j,m} in m variables with sum zero and sum of squares sum y_k^2.
std::vector<LinearForm> slowpoke_family(int m);

/// a(n) fourth powers and a residual quartic in x_1..x_{n-1}.
Decomposition quartic_lift(const Form& p, double eps = kDefaultEps);
/// Iterated lift down to one variable; the residual is absorbed as a final power.
Decomposition quartic_lift_full(const Form& p, double eps = kDefaultEps);

}  // namespace canonform
