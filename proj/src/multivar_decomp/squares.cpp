#include "canonform/error.hpp"
#include "canonform/multivar_decomp.hpp"

namespace canonform {

Form TriangularSquares::sum_of_squares(int n) const {
    Form s(n, 2);
    for (const auto& r : rows) s += r.power(2);
    return s;
}

Matrix quadratic_matrix(const Form& p) {
    if (p.d() != 2) throw Error(ErrorKind::ShapeMismatch, "quadratic_matrix needs a quadratic form");
    int n = p.n();
    Matrix M(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            MultiIndex k(n, 0);
            k[i] += 1;
            k[j] += 1;
            M(i, j) = p.coeff(k);
        }
    return M;
}

TriangularSquares uppertri(const Form& p, double eps) {
    if (p.d() != 2) throw Error(ErrorKind::ShapeMismatch, "uppertri needs a quadratic form");
    int n = p.n();
    Matrix A = quadratic_matrix(p);
    double approx_tol = eps * std::max(1.0, A.max_abs());
    TriangularSquares T;
    for (int k = 0; k < n; ++k) {
        double tol = A.is_exact() ? 0.0 : approx_tol;
        bool row_zero = true;
        for (int j = k; j < n; ++j) row_zero = row_zero && A(k, j).is_zero(tol);
        LinearForm row(std::vector<Scalar>(n, Scalar(0)));
        if (row_zero) {
            T.rows.push_back(row);
            continue;
        }
        if (A(k, k).is_zero(tol)) throw Error(ErrorKind::PivotZero, "zero pivot at stage " + std::to_string(k + 1), k + 1);
        Scalar s = sqrt(A(k, k));
        for (int j = k; j < n; ++j) row.alpha[j] = A(k, j) / s;
        for (int i = k; i < n; ++i)
            for (int j = k; j < n; ++j) A(i, j) -= row.alpha[i] * row.alpha[j];
        T.rows.push_back(row);
    }
    return T;
}

}  // namespace canonform
