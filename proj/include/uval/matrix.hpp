#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "uval/rational.hpp"

namespace uval {

using Vector = std::vector<Rational>;

/// Dense row-major matrix of exact rationals.
class ExactMatrix {
public:
    ExactMatrix() = default;
    ExactMatrix(std::size_t rows, std::size_t cols);
    /// Builds from nested rows; all rows must have equal length.
    ExactMatrix(std::initializer_list<std::initializer_list<Rational>> rows);
    static ExactMatrix from_rows(const std::vector<Vector>& rows);
    static ExactMatrix identity(std::size_t n);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    std::span<const Rational> row(std::size_t r) const { return {entries_.data() + r * cols_, cols_}; }
    std::span<const Rational> entries() const { return entries_; }

    ExactMatrix transpose() const;
    bool is_symmetric() const;
    bool is_zero() const;
    ExactMatrix block(std::size_t r0, std::size_t c0, std::size_t rows, std::size_t cols) const;

    ExactMatrix& operator+=(const ExactMatrix& other);
    ExactMatrix& operator-=(const ExactMatrix& other);
    ExactMatrix& operator*=(const Rational& scalar);

    friend ExactMatrix operator+(ExactMatrix a, const ExactMatrix& b) { return a += b; }
    friend ExactMatrix operator-(ExactMatrix a, const ExactMatrix& b) { return a -= b; }
    friend ExactMatrix operator*(ExactMatrix a, const Rational& s) { return a *= s; }
    friend ExactMatrix operator*(const Rational& s, ExactMatrix a) { return a *= s; }
    friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
    friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> entries_;
};

/// Exact inverse by rational Gauss-Jordan; pivot is the first nonzero entry
/// at or below the diagonal. Throws SingularMatrix.
ExactMatrix mat_inverse(const ExactMatrix& m);

/// Determinant by rational elimination.
Rational determinant(const ExactMatrix& m);

/// Reduces m in place to reduced row echelon form, scanning for pivots in the
/// first pivot_cols columns only. Returns the pivot columns in row order.
std::vector<std::size_t> row_reduce(ExactMatrix& m, std::size_t pivot_cols);

/// Rank of m.
std::size_t rank(const ExactMatrix& m);

/// Finds lambda with sum_i lambda_i * generators[i] == target, or nullopt when
/// target is not in the span. When the generators are dependent the returned
/// combination sets free coefficients to zero.
std::optional<Vector> solve_in_span(const std::vector<Vector>& generators, const Vector& target);

/// Leading principal minors det(m[0..r, 0..r]) for r = 1..n.
Vector leading_minors(const ExactMatrix& m);

/// Sylvester's criterion over exact minors. Throws NotSymmetric.
bool is_positive_definite(const ExactMatrix& m);

/// Block diagonal [[a, 0], [0, b]].
ExactMatrix block_diagonal(const ExactMatrix& a, const ExactMatrix& b);

}  // namespace uval
