#include "rumin/linalg.hpp"

#include "rumin/errors.hpp"

namespace rumin {

Matrix Matrix::identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw DimensionMismatch("DimensionMismatch: matrix product");
    Matrix c(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
        for (int k = 0; k < a.cols_; ++k) {
            const Scalar& x = a(i, k);
            if (x.is_zero()) continue;
            for (int j = 0; j < b.cols_; ++j)
                if (!b(k, j).is_zero()) c(i, j) += x * b(k, j);
        }
    return c;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionMismatch("DimensionMismatch: matrix sum");
    Matrix c = a;
    for (std::size_t k = 0; k < c.a_.size(); ++k) c.a_[k] += b.a_[k];
    return c;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionMismatch("DimensionMismatch: matrix difference");
    Matrix c = a;
    for (std::size_t k = 0; k < c.a_.size(); ++k) c.a_[k] -= b.a_[k];
    return c;
}

bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
}

bool Matrix::is_zero() const {
    for (const auto& x : a_)
        if (!x.is_zero()) return false;
    return true;
}

Matrix Matrix::rref(std::vector<int>* pivots) const {
    Matrix m = *this;
    std::vector<int> piv;
    int r = 0;
    for (int c = 0; c < cols_ && r < rows_; ++c) {
        int p = -1;
        for (int i = r; i < rows_; ++i)
            if (!m(i, c).is_zero()) {
                p = i;
                break;
            }
        if (p < 0) continue;
        if (p != r)
            for (int j = 0; j < cols_; ++j) std::swap(m(p, j), m(r, j));
        Scalar inv = m(r, c).inverse();
        for (int j = c; j < cols_; ++j) m(r, j) *= inv;
        for (int i = 0; i < rows_; ++i) {
            if (i == r || m(i, c).is_zero()) continue;
            Scalar f = m(i, c);
            for (int j = c; j < cols_; ++j)
                if (!m(r, j).is_zero()) m(i, j) -= f * m(r, j);
        }
        piv.push_back(c);
        ++r;
    }
    if (pivots) *pivots = piv;
    return m;
}

int Matrix::rank() const {
    std::vector<int> piv;
    rref(&piv);
    return static_cast<int>(piv.size());
}

Matrix Matrix::nullspace() const {
    std::vector<int> piv;
    Matrix r = rref(&piv);
    std::vector<bool> is_piv(cols_, false);
    for (int c : piv) is_piv[c] = true;
    std::vector<int> free;
    for (int c = 0; c < cols_; ++c)
        if (!is_piv[c]) free.push_back(c);
    Matrix n(cols_, static_cast<int>(free.size()));
    for (std::size_t k = 0; k < free.size(); ++k) {
        int f = free[k];
        n(f, static_cast<int>(k)) = 1;
        for (std::size_t i = 0; i < piv.size(); ++i) n(piv[i], static_cast<int>(k)) = -r(static_cast<int>(i), f);
    }
    return n;
}

Matrix Matrix::inverse() const {
    if (rows_ != cols_) throw DimensionMismatch("DimensionMismatch: inverse of non-square matrix");
    Matrix aug(rows_, 2 * cols_);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) aug(i, j) = (*this)(i, j);
        aug(i, cols_ + i) = 1;
    }
    std::vector<int> piv;
    Matrix r = aug.rref(&piv);
    if (static_cast<int>(piv.size()) < rows_ || piv.back() >= cols_) throw DivisionByZero();
    Matrix inv(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) inv(i, j) = r(i, cols_ + j);
    return inv;
}

std::optional<std::vector<Scalar>> Matrix::solve(const std::vector<Scalar>& b) const {
    if (static_cast<int>(b.size()) != rows_) throw DimensionMismatch("DimensionMismatch: solve");
    Matrix aug(rows_, cols_ + 1);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) aug(i, j) = (*this)(i, j);
        aug(i, cols_) = b[i];
    }
    std::vector<int> piv;
    Matrix r = aug.rref(&piv);
    if (!piv.empty() && piv.back() == cols_) return std::nullopt;
    std::vector<Scalar> x(cols_);
    for (std::size_t i = 0; i < piv.size(); ++i) x[piv[i]] = r(static_cast<int>(i), cols_);
    return x;
}

Matrix Matrix::pseudoinverse() const {
    std::vector<int> piv;
    Matrix red = rref(&piv);
    int k = static_cast<int>(piv.size());
    if (k == 0) return Matrix(cols_, rows_);
    Matrix R(k, cols_);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < cols_; ++j) R(i, j) = red(i, j);
    Matrix C(rows_, k);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < k; ++j) C(i, j) = (*this)(i, piv[j]);
    Matrix Rt = R.transpose();
    Matrix Ct = C.transpose();
    return Rt * (R * Rt).inverse() * (Ct * C).inverse() * Ct;
}

std::vector<Scalar> Matrix::column(int j) const {
    std::vector<Scalar> v(rows_);
    for (int i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
}

std::vector<Scalar> Matrix::apply(const std::vector<Scalar>& x) const {
    if (static_cast<int>(x.size()) != cols_) throw DimensionMismatch("DimensionMismatch: apply");
    std::vector<Scalar> y(rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (!x[j].is_zero() && !(*this)(i, j).is_zero()) y[i] += (*this)(i, j) * x[j];
    return y;
}

Scalar dot(const std::vector<Scalar>& a, const std::vector<Scalar>& b) {
    if (a.size() != b.size()) throw DimensionMismatch("DimensionMismatch: dot");
    Scalar s;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!a[i].is_zero() && !b[i].is_zero()) s += a[i] * b[i];
    return s;
}

std::vector<std::vector<Scalar>> gram_schmidt(const std::vector<std::vector<Scalar>>& vs) {
    // Orthogonalise without normalising first so that intermediate values
    // stay in the field generated by the inputs, then scale each vector.
    std::vector<std::vector<Scalar>> ortho;
    std::vector<Scalar> norms;
    for (const auto& v : vs) {
        std::vector<Scalar> w = v;
        for (std::size_t k = 0; k < ortho.size(); ++k) {
            Scalar f = dot(v, ortho[k]) / norms[k];
            if (f.is_zero()) continue;
            for (std::size_t i = 0; i < w.size(); ++i) w[i] -= f * ortho[k][i];
        }
        Scalar n2 = dot(w, w);
        if (n2.is_zero()) throw InvalidInput("gram_schmidt: dependent vectors");
        ortho.push_back(w);
        norms.push_back(n2);
    }
    for (std::size_t k = 0; k < ortho.size(); ++k) {
        Scalar inv = Scalar::sqrt(norms[k]).inverse();
        for (auto& x : ortho[k]) x *= inv;
    }
    return ortho;
}

}  // namespace rumin
