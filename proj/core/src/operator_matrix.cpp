#include "rumin/operator_matrix.hpp"

#include "rumin/errors.hpp"

namespace rumin {

OperatorMatrix::OperatorMatrix(RingPtr ring, int rows, int cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols),
      a_(static_cast<std::size_t>(rows) * cols, EnvElement(ring_)) {}

OperatorMatrix OperatorMatrix::from_scalars(const RingPtr& ring, const Matrix& m) {
    OperatorMatrix out(ring, m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) out.at(i, j) = EnvElement::constant(ring, m(i, j));
    return out;
}

OperatorMatrix OperatorMatrix::diagonal(const RingPtr& ring, int n, const EnvElement& diag) {
    OperatorMatrix out(ring, n, n);
    for (int i = 0; i < n; ++i) out.at(i, i) = diag;
    return out;
}

std::vector<EnvElement> OperatorMatrix::row(int i) const {
    return {a_.begin() + static_cast<std::ptrdiff_t>(i) * cols_, a_.begin() + static_cast<std::ptrdiff_t>(i + 1) * cols_};
}

OperatorMatrix operator*(const OperatorMatrix& a, const OperatorMatrix& b) {
    if (a.cols_ != b.rows_)
        throw DimensionMismatch("DimensionMismatch: " + std::to_string(a.rows_) + "x" + std::to_string(a.cols_) +
                                " times " + std::to_string(b.rows_) + "x" + std::to_string(b.cols_));
    OperatorMatrix c(a.ring_ ? a.ring_ : b.ring_, a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
        for (int k = 0; k < a.cols_; ++k) {
            const EnvElement& x = a.at(i, k);
            if (x.is_zero()) continue;
            for (int j = 0; j < b.cols_; ++j)
                if (!b.at(k, j).is_zero()) c.at(i, j) += x * b.at(k, j);
        }
    return c;
}

OperatorMatrix operator+(const OperatorMatrix& a, const OperatorMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionMismatch("DimensionMismatch: operator matrix sum");
    OperatorMatrix c = a;
    for (std::size_t k = 0; k < c.a_.size(); ++k) c.a_[k] += b.a_[k];
    return c;
}

OperatorMatrix operator-(const OperatorMatrix& a, const OperatorMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw DimensionMismatch("DimensionMismatch: operator matrix difference");
    OperatorMatrix c = a;
    for (std::size_t k = 0; k < c.a_.size(); ++k) c.a_[k] -= b.a_[k];
    return c;
}

OperatorMatrix operator*(const Scalar& s, const OperatorMatrix& a) {
    OperatorMatrix c = a;
    for (auto& x : c.a_) x *= s;
    return c;
}

bool operator==(const OperatorMatrix& a, const OperatorMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
}

bool OperatorMatrix::is_zero() const {
    for (const auto& x : a_)
        if (!x.is_zero()) return false;
    return true;
}

OperatorMatrix OperatorMatrix::power(int k) const {
    if (rows_ != cols_) throw DimensionMismatch("DimensionMismatch: power of non-square matrix");
    OperatorMatrix r = diagonal(ring_, rows_, EnvElement::constant(ring_, 1));
    for (int i = 0; i < k; ++i) r = r * *this;
    return r;
}

OperatorMatrix OperatorMatrix::adjoint_transpose() const {
    OperatorMatrix t(ring_, cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t.at(j, i) = formal_adjoint(at(i, j));
    return t;
}

std::optional<int> OperatorMatrix::order() const {
    std::optional<int> d;
    for (const auto& x : a_) {
        if (x.is_zero()) continue;
        Homogeneity h = homogeneity(x);
        if (h.is_mixed()) return std::nullopt;
        if (d && *d != *h.degree) return std::nullopt;
        d = h.degree;
    }
    return d;
}

std::string OperatorMatrix::str() const {
    std::string out;
    for (int i = 0; i < rows_; ++i) {
        if (i) out += "\n";
        out += "[";
        for (int j = 0; j < cols_; ++j) {
            if (j) out += "  ";
            out += at(i, j).str();
        }
        out += "]";
    }
    return out;
}

std::string OperatorMatrix::latex() const {
    std::string out = "\\begin{pmatrix}\n";
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) {
            if (j) out += " & ";
            out += at(i, j).latex();
        }
        out += i + 1 < rows_ ? " \\\\\n" : "\n";
    }
    return out + "\\end{pmatrix}";
}

OperatorMatrix parse_matrix(const RingPtr& ring, const std::vector<std::vector<std::string>>& rows) {
    int r = static_cast<int>(rows.size());
    int c = r ? static_cast<int>(rows[0].size()) : 0;
    OperatorMatrix m(ring, r, c);
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(rows[i].size()) != c) throw DimensionMismatch("DimensionMismatch: ragged matrix");
        for (int j = 0; j < c; ++j) m.at(i, j) = parse_env(ring, rows[i][j]);
    }
    return m;
}

}  // namespace rumin
