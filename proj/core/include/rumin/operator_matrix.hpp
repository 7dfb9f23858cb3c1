#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rumin/env_algebra.hpp"
#include "rumin/linalg.hpp"

namespace rumin {

// Dense matrix of left-invariant operators acting on coefficient columns.
class OperatorMatrix {
public:
    OperatorMatrix() = default;
    OperatorMatrix(RingPtr ring, int rows, int cols);
    static OperatorMatrix from_scalars(const RingPtr& ring, const Matrix& m);
    // diag * identity(n)
    static OperatorMatrix diagonal(const RingPtr& ring, int n, const EnvElement& diag);

    const RingPtr& ring() const { return ring_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }
    EnvElement& at(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    const EnvElement& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    std::vector<EnvElement> row(int i) const;

    friend OperatorMatrix operator*(const OperatorMatrix& a, const OperatorMatrix& b);
    friend OperatorMatrix operator+(const OperatorMatrix& a, const OperatorMatrix& b);
    friend OperatorMatrix operator-(const OperatorMatrix& a, const OperatorMatrix& b);
    friend OperatorMatrix operator*(const Scalar& c, const OperatorMatrix& a);
    friend bool operator==(const OperatorMatrix& a, const OperatorMatrix& b);
    bool is_zero() const;
    OperatorMatrix power(int k) const;

    // Entrywise formal adjoint of the transpose.
    OperatorMatrix adjoint_transpose() const;
    // Common homogeneity of all nonzero entries; nullopt when mixed or zero.
    std::optional<int> order() const;

    // Rows as "[a  b  c]" separated by newlines.
    std::string str() const;
    std::string latex() const;

    // Bookkeeping used by exporters.
    std::string name;
    int source_degree = -1;
    std::optional<int> claimed_order;

private:
    RingPtr ring_;
    int rows_ = 0;
    int cols_ = 0;
    std::vector<EnvElement> a_;
};

// A matrix from rows of operator strings in the text grammar.
OperatorMatrix parse_matrix(const RingPtr& ring, const std::vector<std::vector<std::string>>& rows);

}  // namespace rumin
