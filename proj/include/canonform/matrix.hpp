#pragma once

#include <optional>
#include <vector>

#include "canonform/scalar.hpp"

namespace canonform {

/// Dense row-major matrix of Scalars.
class Matrix {
  public:
    Matrix() = default;
    Matrix(int rows, int cols) : r_(rows), c_(cols), a_(static_cast<size_t>(rows) * cols) {}
    Matrix(std::initializer_list<std::initializer_list<Scalar>> rows);
    static Matrix identity(int n);
    static Matrix from_rows(const std::vector<std::vector<Scalar>>& rows);

    int rows() const { return r_; }
    int cols() const { return c_; }
    Scalar& operator()(int i, int j) { return a_[static_cast<size_t>(i) * c_ + j]; }
    const Scalar& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * c_ + j]; }

    bool is_exact() const;
    double max_abs() const;
    Matrix to_approx() const;
    Matrix transpose() const;
    std::vector<Scalar> row(int i) const;
    std::vector<Scalar> col(int j) const;

    friend Matrix operator*(const Matrix& a, const Matrix& b);
    std::vector<Scalar> apply(const std::vector<Scalar>& v) const;

  private:
    int r_ = 0;
    int c_ = 0;
    std::vector<Scalar> a_;
};

/// Reduced row echelon form; exact when the matrix is exact, otherwise partial
/// pivoting with entries below eps * max|M| treated as zero.
struct Echelon {
    Matrix R;
    std::vector<int> pivots;
};
Echelon rref(const Matrix& M, double eps = kDefaultEps);
int rank(const Matrix& M, double eps = kDefaultEps);
/// Basis of the right kernel; each vector's first nonzero entry is 1.
std::vector<std::vector<Scalar>> kernel(const Matrix& M, double eps = kDefaultEps);
/// Some solution of M x = b, or nullopt if inconsistent.
std::optional<std::vector<Scalar>> solve(const Matrix& M, const std::vector<Scalar>& b, double eps = kDefaultEps);
std::optional<Matrix> inverse(const Matrix& M, double eps = kDefaultEps);
Scalar determinant(const Matrix& M);

}  // namespace canonform
