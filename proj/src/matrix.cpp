#include "uval/matrix.hpp"

#include <utility>

#include "uval/error.hpp"

namespace uval {

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

ExactMatrix::ExactMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    entries_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw DimensionMismatch("ragged matrix rows");
        entries_.insert(entries_.end(), r.begin(), r.end());
    }
}

ExactMatrix ExactMatrix::from_rows(const std::vector<Vector>& rows) {
    ExactMatrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
    for (std::size_t r = 0; r < m.rows_; ++r) {
        if (rows[r].size() != m.cols_) throw DimensionMismatch("ragged matrix rows");
        for (std::size_t c = 0; c < m.cols_; ++c) m(r, c) = rows[r][c];
    }
    return m;
}

ExactMatrix ExactMatrix::identity(std::size_t n) {
    ExactMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

ExactMatrix ExactMatrix::transpose() const {
    ExactMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

bool ExactMatrix::is_symmetric() const {
    if (!is_square()) return false;
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = r + 1; c < cols_; ++c)
            if ((*this)(r, c) != (*this)(c, r)) return false;
    return true;
}

bool ExactMatrix::is_zero() const {
    for (const auto& e : entries_)
        if (!e.is_zero()) return false;
    return true;
}

ExactMatrix ExactMatrix::block(std::size_t r0, std::size_t c0, std::size_t rows, std::size_t cols) const {
    if (r0 + rows > rows_ || c0 + cols > cols_) throw DimensionMismatch("block outside matrix");
    ExactMatrix b(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) b(r, c) = (*this)(r0 + r, c0 + c);
    return b;
}

ExactMatrix& ExactMatrix::operator+=(const ExactMatrix& other) {
    if (rows_ != other.rows_ || cols_ != other.cols_) throw DimensionMismatch("matrix sum shape");
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += other.entries_[i];
    return *this;
}

ExactMatrix& ExactMatrix::operator-=(const ExactMatrix& other) {
    if (rows_ != other.rows_ || cols_ != other.cols_) throw DimensionMismatch("matrix difference shape");
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= other.entries_[i];
    return *this;
}

ExactMatrix& ExactMatrix::operator*=(const Rational& scalar) {
    for (auto& e : entries_) e *= scalar;
    return *this;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product shape");
    ExactMatrix out(a.rows_, b.cols_);
    for (std::size_t r = 0; r < a.rows_; ++r)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Rational& lhs = a(r, k);
            if (lhs.is_zero()) continue;
            for (std::size_t c = 0; c < b.cols_; ++c) out(r, c) += lhs * b(k, c);
        }
    return out;
}

std::vector<std::size_t> row_reduce(ExactMatrix& m, std::size_t pivot_cols) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < pivot_cols && row < m.rows(); ++col) {
        std::size_t p = row;
        while (p < m.rows() && m(p, col).is_zero()) ++p;
        if (p == m.rows()) continue;
        if (p != row)
            for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(p, c), m(row, c));
        const Rational inv = Rational(1) / m(row, col);
        for (std::size_t c = 0; c < m.cols(); ++c) m(row, c) *= inv;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == row || m(r, col).is_zero()) continue;
            const Rational f = m(r, col);
            for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) -= f * m(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

ExactMatrix mat_inverse(const ExactMatrix& m) {
    if (!m.is_square()) throw DimensionMismatch("inverse of non-square matrix");
    const std::size_t n = m.rows();
    ExactMatrix aug(n, 2 * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
        aug(r, n + r) = 1;
    }
    if (row_reduce(aug, n).size() != n) throw SingularMatrix();
    return aug.block(0, n, n, n);
}

Rational determinant(const ExactMatrix& m) {
    if (!m.is_square()) throw DimensionMismatch("determinant of non-square matrix");
    ExactMatrix a = m;
    const std::size_t n = a.rows();
    Rational det(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t p = col;
        while (p < n && a(p, col).is_zero()) ++p;
        if (p == n) return Rational(0);
        if (p != col) {
            for (std::size_t c = col; c < n; ++c) std::swap(a(p, c), a(col, c));
            det = -det;
        }
        det *= a(col, col);
        const Rational inv = Rational(1) / a(col, col);
        for (std::size_t r = col + 1; r < n; ++r) {
            if (a(r, col).is_zero()) continue;
            const Rational f = a(r, col) * inv;
            for (std::size_t c = col; c < n; ++c) a(r, c) -= f * a(col, c);
        }
    }
    return det;
}

std::size_t rank(const ExactMatrix& m) {
    ExactMatrix a = m;
    return row_reduce(a, a.cols()).size();
}

std::optional<Vector> solve_in_span(const std::vector<Vector>& generators, const Vector& target) {
    const std::size_t len = target.size();
    const std::size_t g = generators.size();
    // Columns are generators; augmented with the target.
    ExactMatrix aug(len, g + 1);
    for (std::size_t j = 0; j < g; ++j) {
        if (generators[j].size() != len) throw DimensionMismatch("generator length differs from target");
        for (std::size_t i = 0; i < len; ++i) aug(i, j) = generators[j][i];
    }
    for (std::size_t i = 0; i < len; ++i) aug(i, g) = target[i];
    const auto pivots = row_reduce(aug, g);
    for (std::size_t r = pivots.size(); r < len; ++r)
        if (!aug(r, g).is_zero()) return std::nullopt;
    Vector lambda(g);
    for (std::size_t r = 0; r < pivots.size(); ++r) lambda[pivots[r]] = aug(r, g);
    return lambda;
}

Vector leading_minors(const ExactMatrix& m) {
    if (!m.is_square()) throw DimensionMismatch("minors of non-square matrix");
    Vector minors;
    minors.reserve(m.rows());
    for (std::size_t r = 1; r <= m.rows(); ++r) minors.push_back(determinant(m.block(0, 0, r, r)));
    return minors;
}

bool is_positive_definite(const ExactMatrix& m) {
    if (!m.is_symmetric()) throw NotSymmetric();
    for (std::size_t r = 1; r <= m.rows(); ++r)
        if (determinant(m.block(0, 0, r, r)).sign() <= 0) return false;
    return true;
}

ExactMatrix block_diagonal(const ExactMatrix& a, const ExactMatrix& b) {
    ExactMatrix out(a.rows() + b.rows(), a.cols() + b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c);
    for (std::size_t r = 0; r < b.rows(); ++r)
        for (std::size_t c = 0; c < b.cols(); ++c) out(a.rows() + r, a.cols() + c) = b(r, c);
    return out;
}

}  // namespace uval
