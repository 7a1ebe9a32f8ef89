#pragma once

#include <functional>
#include <map>
#include <memory>
#include <utility>
#include <vector>

#include "uval/algebra.hpp"
#include "uval/matrix.hpp"

namespace uval {

/// Element of A ⊗ B stored as bidegree blocks: block (dL, dR) holds the
/// coefficients over basis_A(dL) × basis_B(dR). All-zero blocks are dropped.
class TensorElement {
public:
    using Bidegree = std::pair<int, int>;
    using Blocks = std::map<Bidegree, ExactMatrix>;

    struct Term {
        Monomial left;
        Monomial right;
        Rational coefficient;
    };

    TensorElement(std::shared_ptr<const QuotientAlgebra> left, std::shared_ptr<const QuotientAlgebra> right);

    const QuotientAlgebra& left() const { return *left_; }
    const QuotientAlgebra& right() const { return *right_; }
    std::shared_ptr<const QuotientAlgebra> left_ptr() const { return left_; }
    std::shared_ptr<const QuotientAlgebra> right_ptr() const { return right_; }

    const Blocks& blocks() const noexcept { return blocks_; }
    /// The stored block, or a zero matrix of the right shape.
    ExactMatrix block(int left_degree, int right_degree) const;
    void set_block(int left_degree, int right_degree, ExactMatrix m);
    bool is_zero() const noexcept { return blocks_.empty(); }

    /// Adds c * (l ⊗ r) for basis monomials l, r.
    void add_basis_term(const Monomial& l, const Monomial& r, const Rational& c);
    /// Adds c * (a ⊗ b) for normal-form polynomials a, b.
    void add(const GradedPoly& a, const GradedPoly& b, const Rational& c = Rational(1));

    Rational coefficient(const Monomial& l, const Monomial& r) const;
    std::vector<Term> terms() const;

    /// Applies a linear map on the left factor, given on basis monomials; the
    /// image is normalised in `target`.
    TensorElement map_left(const std::function<GradedPoly(const Monomial&)>& f,
                           std::shared_ptr<const QuotientAlgebra> target) const;
    TensorElement map_right(const std::function<GradedPoly(const Monomial&)>& f,
                            std::shared_ptr<const QuotientAlgebra> target) const;
    /// b ⊗ a for every a ⊗ b.
    TensorElement swapped() const;

    TensorElement& operator+=(const TensorElement& other);
    TensorElement& operator-=(const TensorElement& other);
    TensorElement& operator*=(const Rational& c);
    friend TensorElement operator+(TensorElement a, const TensorElement& b) { return a += b; }
    friend TensorElement operator-(TensorElement a, const TensorElement& b) { return a -= b; }
    friend TensorElement operator*(const Rational& c, TensorElement a) { return a *= c; }
    friend bool operator==(const TensorElement& a, const TensorElement& b);

private:
    void check_compatible(const TensorElement& other) const;
    void prune();

    std::shared_ptr<const QuotientAlgebra> left_;
    std::shared_ptr<const QuotientAlgebra> right_;
    Blocks blocks_;
};

/// (φ ⊗ 1) · T, products reduced in T's left algebra.
TensorElement multiply_left(const TensorElement& tensor, const GradedPoly& phi);
/// (1 ⊗ φ) · T.
TensorElement multiply_right(const TensorElement& tensor, const GradedPoly& phi);

/// sum_{i+j = n+k} t^i ⊗ t^j in Val^{SO(n)} ⊗ Val^{SO(n)}. Requires 0 <= k <= n.
TensorElement so_kinematic(int n_real, int k);

}  // namespace uval
