#include "canonform/matrix.hpp"

#include <stdexcept>

#include "canonform/error.hpp"

namespace canonform {

Matrix::Matrix(std::initializer_list<std::initializer_list<Scalar>> rows) {
    r_ = static_cast<int>(rows.size());
    c_ = r_ ? static_cast<int>(rows.begin()->size()) : 0;
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != c_) throw Error(ErrorKind::ShapeMismatch, "ragged matrix");
        for (const auto& x : row) a_.push_back(x);
    }
}

Matrix Matrix::identity(int n) {
    Matrix I(n, n);
    for (int i = 0; i < n; ++i) I(i, i) = 1;
    return I;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Scalar>>& rows) {
    int r = static_cast<int>(rows.size());
    int c = r ? static_cast<int>(rows[0].size()) : 0;
    Matrix M(r, c);
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(rows[i].size()) != c) throw Error(ErrorKind::ShapeMismatch, "ragged matrix");
        for (int j = 0; j < c; ++j) M(i, j) = rows[i][j];
    }
    return M;
}

bool Matrix::is_exact() const {
    for (const auto& x : a_)
        if (!x.is_exact()) return false;
    return true;
}

double Matrix::max_abs() const {
    double m = 0;
    for (const auto& x : a_) m = std::max(m, x.abs());
    return m;
}

Matrix Matrix::to_approx() const {
    Matrix M = *this;
    for (auto& x : M.a_) x = x.to_approx();
    return M;
}

Matrix Matrix::transpose() const {
    Matrix T(c_, r_);
    for (int i = 0; i < r_; ++i)
        for (int j = 0; j < c_; ++j) T(j, i) = (*this)(i, j);
    return T;
}

std::vector<Scalar> Matrix::row(int i) const {
    std::vector<Scalar> v(c_);
    for (int j = 0; j < c_; ++j) v[j] = (*this)(i, j);
    return v;
}

std::vector<Scalar> Matrix::col(int j) const {
    std::vector<Scalar> v(r_);
    for (int i = 0; i < r_; ++i) v[i] = (*this)(i, j);
    return v;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) throw Error(ErrorKind::ShapeMismatch, "matrix product");
    Matrix C(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            if (a(i, k).is_zero(0.0)) continue;
            for (int j = 0; j < b.cols(); ++j) C(i, j) += a(i, k) * b(k, j);
        }
    return C;
}

std::vector<Scalar> Matrix::apply(const std::vector<Scalar>& v) const {
    if (static_cast<int>(v.size()) != c_) throw Error(ErrorKind::ShapeMismatch, "matrix-vector product");
    std::vector<Scalar> out(r_);
    for (int i = 0; i < r_; ++i)
        for (int j = 0; j < c_; ++j) out[i] += (*this)(i, j) * v[j];
    return out;
}

Echelon rref(const Matrix& M0, double eps) {
    bool exact = M0.is_exact();
    Matrix M = exact ? M0 : M0.to_approx();
    double thresh = exact ? 0.0 : eps * std::max(M.max_abs(), 1e-300);
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < M.cols() && r < M.rows(); ++c) {
        int best = -1;
        double bestv = thresh;
        for (int i = r; i < M.rows(); ++i) {
            if (exact) {
                if (!M(i, c).is_zero()) { best = i; break; }
            } else if (M(i, c).abs() > bestv) {
                best = i;
                bestv = M(i, c).abs();
            }
        }
        if (best < 0) {
            if (!exact)
                for (int i = r; i < M.rows(); ++i) M(i, c) = Scalar(cplx(0, 0));
            continue;
        }
        if (best != r)
            for (int j = 0; j < M.cols(); ++j) std::swap(M(r, j), M(best, j));
        Scalar inv = M(r, c).inverse();
        for (int j = c; j < M.cols(); ++j) M(r, j) *= inv;
        for (int i = 0; i < M.rows(); ++i) {
            if (i == r || M(i, c).is_zero(0.0)) continue;
            Scalar f = M(i, c);
            for (int j = c; j < M.cols(); ++j) M(i, j) -= f * M(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return {M, pivots};
}

int rank(const Matrix& M, double eps) { return static_cast<int>(rref(M, eps).pivots.size()); }

std::vector<std::vector<Scalar>> kernel(const Matrix& M, double eps) {
    Echelon E = rref(M, eps);
    std::vector<bool> is_pivot(M.cols(), false);
    for (int p : E.pivots) is_pivot[p] = true;
    std::vector<std::vector<Scalar>> basis;
    bool exact = M.is_exact();
    for (int f = 0; f < M.cols(); ++f) {
        if (is_pivot[f]) continue;
        std::vector<Scalar> v(M.cols(), exact ? Scalar(0) : Scalar(cplx(0, 0)));
        v[f] = 1;
        for (size_t k = 0; k < E.pivots.size(); ++k) v[E.pivots[k]] = -E.R(static_cast<int>(k), f);
        for (size_t k = 0; k < v.size(); ++k) {
            if (!v[k].is_zero(exact ? 0.0 : eps)) {
                Scalar s = v[k].inverse();
                for (auto& x : v) x *= s;
                break;
            }
        }
        basis.push_back(v);
    }
    return basis;
}

std::optional<std::vector<Scalar>> solve(const Matrix& A, const std::vector<Scalar>& b, double eps) {
    if (static_cast<int>(b.size()) != A.rows()) throw Error(ErrorKind::ShapeMismatch, "solve");
    Matrix Ab(A.rows(), A.cols() + 1);
    for (int i = 0; i < A.rows(); ++i) {
        for (int j = 0; j < A.cols(); ++j) Ab(i, j) = A(i, j);
        Ab(i, A.cols()) = b[i];
    }
    bool exact = Ab.is_exact();
    // Column equilibration so that the rank threshold is scale-free per unknown.
    std::vector<double> scale(Ab.cols(), 1.0);
    if (!exact) {
        for (int j = 0; j < Ab.cols(); ++j) {
            double m = 0;
            for (int i = 0; i < Ab.rows(); ++i) m = std::max(m, Ab(i, j).abs());
            if (m > 0) scale[j] = m;
            for (int i = 0; i < Ab.rows(); ++i) Ab(i, j) = Ab(i, j).to_approx() / Scalar(scale[j]);
        }
    }
    Echelon E = rref(Ab, eps);
    if (!E.pivots.empty() && E.pivots.back() == A.cols()) return std::nullopt;
    std::vector<Scalar> x(A.cols(), exact ? Scalar(0) : Scalar(cplx(0, 0)));
    for (size_t k = 0; k < E.pivots.size(); ++k) {
        int j = E.pivots[k];
        x[j] = E.R(static_cast<int>(k), A.cols());
        if (!exact) x[j] *= Scalar(scale[A.cols()] / scale[j]);
    }
    return x;
}

std::optional<Matrix> inverse(const Matrix& A, double eps) {
    if (A.rows() != A.cols()) throw Error(ErrorKind::ShapeMismatch, "inverse of non-square matrix");
    int n = A.rows();
    if (n == 0) return Matrix(0, 0);
    Matrix Ai(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) Ai(i, j) = A(i, j);
        Ai(i, n + i) = 1;
    }
    Echelon E = rref(Ai, eps);
    if (static_cast<int>(E.pivots.size()) < n || E.pivots[n - 1] != n - 1) return std::nullopt;
    Matrix out(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out(i, j) = E.R(i, n + j);
    return out;
}

Scalar determinant(const Matrix& A0) {
    if (A0.rows() != A0.cols()) throw Error(ErrorKind::ShapeMismatch, "determinant of non-square matrix");
    bool exact = A0.is_exact();
    Matrix A = A0;
    int n = A.rows();
    Scalar det = 1;
    for (int c = 0; c < n; ++c) {
        int best = -1;
        double bestv = 0;
        for (int i = c; i < n; ++i) {
            if (exact) {
                if (!A(i, c).is_zero()) { best = i; break; }
            } else if (A(i, c).abs() > bestv) {
                best = i;
                bestv = A(i, c).abs();
            }
        }
        if (best < 0) return exact ? Scalar(0) : Scalar(cplx(0, 0));
        if (best != c) {
            for (int j = 0; j < n; ++j) std::swap(A(c, j), A(best, j));
            det = -det;
        }
        det *= A(c, c);
        Scalar inv = A(c, c).inverse();
        for (int i = c + 1; i < n; ++i) {
            if (A(i, c).is_zero(0.0)) continue;
            Scalar f = A(i, c) * inv;
            for (int j = c; j < n; ++j) A(i, j) -= f * A(c, j);
        }
    }
    return det;
}

}  // namespace canonform
