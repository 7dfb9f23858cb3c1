#pragma once

#include <optional>
#include <vector>

#include "rumin/scalar.hpp"

namespace rumin {

// Dense row-major matrix over Scalar. Small by design: weight blocks of the
// exterior algebra and bracket spans rarely exceed a few dozen columns.
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {}
    static Matrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Scalar& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    const Scalar& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

    Matrix transpose() const;
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend Matrix operator-(const Matrix& a, const Matrix& b);
    friend bool operator==(const Matrix& a, const Matrix& b);
    bool is_zero() const;

    // Reduced row echelon form; pivot columns are returned in order.
    Matrix rref(std::vector<int>* pivots = nullptr) const;
    int rank() const;
    // Columns form a basis of the right nullspace, one per free column, in
    // ascending free-column order (the standard RREF basis).
    Matrix nullspace() const;
    Matrix inverse() const;
    // Some x with A x = b, or nullopt.
    std::optional<std::vector<Scalar>> solve(const std::vector<Scalar>& b) const;
    // Moore-Penrose pseudoinverse via a full-rank factorization A = C R.
    Matrix pseudoinverse() const;

    std::vector<Scalar> column(int j) const;
    std::vector<Scalar> apply(const std::vector<Scalar>& x) const;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Scalar> a_;
};

Scalar dot(const std::vector<Scalar>& a, const std::vector<Scalar>& b);

// Orthonormalise the given vectors (assumed independent). Norms must be
// rational after orthogonalisation, otherwise TowerInsufficient is raised.
std::vector<std::vector<Scalar>> gram_schmidt(const std::vector<std::vector<Scalar>>& vs);

}  // namespace rumin
