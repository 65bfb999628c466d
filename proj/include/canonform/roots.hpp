#pragma once

#include <utility>
#include <vector>

#include "canonform/linear_form.hpp"
#include "canonform/scalar.hpp"

namespace canonform {

/// Univariate polynomial, coefficients in ascending degree.
using UPoly = std::vector<Scalar>;

namespace upoly {
void trim(UPoly& p, double tol = 0.0);
int degree(const UPoly& p);
Scalar eval(const UPoly& p, const Scalar& t);
UPoly derivative(const UPoly& p);
UPoly mul(const UPoly& a, const UPoly& b);
/// Quotient and remainder; exact for exact data.
std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);
/// Monic gcd over Q(i); exact inputs only.
UPoly gcd(UPoly a, UPoly b);
/// Yun squarefree decomposition of exact p: factors[k] is the product of roots of multiplicity k+1.
std::vector<UPoly> squarefree(const UPoly& p);
}  // namespace upoly

/// All complex roots of a polynomial with complex coefficients (companion matrix
/// eigenvalues polished by Newton steps). Leading coefficient must be nonzero.
std::vector<cplx> poly_roots(const std::vector<cplx>& coeffs);

/// Chordal distance on the Riemann sphere.
double chordal(cplx a, cplx b);

/// Merge roots closer than tol in the chordal metric; returns (representative, multiplicity).
std::vector<std::pair<cplx, int>> cluster_roots(const std::vector<cplx>& roots, double tol);

struct BinaryFactorization {
    Scalar constant;
    /// Factors are normalized as t*x - y, or x for the root at infinity.
    std::vector<std::pair<LinearForm, int>> factors;

    Form product() const;
};

/// p = constant * prod (beta_j x - alpha_j y)^m_j for a nonzero binary form.
BinaryFactorization binary_factor(const Form& p, double eps = kDefaultEps);

/// Zero point (alpha, beta) of a binary linear factor beta x - alpha y.
std::pair<Scalar, Scalar> zero_of(const LinearForm& l);

}  // namespace canonform
