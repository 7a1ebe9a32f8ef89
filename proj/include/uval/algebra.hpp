#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "uval/poly.hpp"

namespace uval {

enum class Family { kUnitary, kOrthogonal };

/// Identifies an algebra in payloads and error messages: Val^{U(n)} or Val^{SO(n)}.
struct AlgebraId {
    Family family = Family::kUnitary;
    int n = 1;

    friend bool operator==(const AlgebraId&, const AlgebraId&) = default;
    std::string to_string() const;
};

class AlgebraElement;

/// A graded quotient of Q[s,t] with a chosen monomial basis in each degree
/// and a one-dimensional top degree spanned by t^top_degree().
class QuotientAlgebra : public std::enable_shared_from_this<QuotientAlgebra> {
public:
    virtual ~QuotientAlgebra() = default;

    virtual AlgebraId id() const = 0;
    virtual int top_degree() const = 0;
    /// Ordered basis of degree d (ascending power of s); empty outside 0..top_degree().
    virtual const std::vector<Monomial>& basis(int degree) const = 0;
    /// Representative supported on basis monomials.
    virtual GradedPoly normal_form(const GradedPoly& p) const = 0;

    Monomial top_monomial() const { return {0, top_degree()}; }
    std::optional<std::size_t> basis_index(const Monomial& m) const;
    /// Sum of basis sizes over all degrees.
    std::size_t dimension() const;

    AlgebraElement element(const GradedPoly& p) const;
    /// Coordinates of a normal-form homogeneous polynomial of the given degree
    /// in basis(degree). Throws AlgebraMismatch if p has support elsewhere.
    std::vector<Rational> coordinates(const GradedPoly& normal, int degree) const;
};

/// Val^{U(n)} realised as Q[s,t]/(f_{n+1}, f_{n+2}).
class UnitaryAlgebra final : public QuotientAlgebra {
public:
    /// Builds the per-degree reduction tables by eliminating the ideal slice in
    /// each degree. Throws InternalInconsistency if the slice dimensions
    /// disagree with the expected monomial basis.
    static std::shared_ptr<const UnitaryAlgebra> build(int n);

    AlgebraId id() const override { return {Family::kUnitary, n_}; }
    int top_degree() const override { return 2 * n_; }
    const std::vector<Monomial>& basis(int degree) const override;
    GradedPoly normal_form(const GradedPoly& p) const override;

    int n() const noexcept { return n_; }
    /// Normal forms of the non-basis monomials of the given degree.
    const std::map<Monomial, GradedPoly>& reductions(int degree) const;
    bool is_basis_monomial(const Monomial& m) const;

    /// Copy with one reduction entry replaced. Only for exercising failure paths.
    std::shared_ptr<const UnitaryAlgebra> with_reduction_override(const Monomial& m,
                                                                  const GradedPoly& replacement) const;

private:
    explicit UnitaryAlgebra(int n) : n_(n) {}

    int n_;
    std::vector<std::vector<Monomial>> basis_;
    std::vector<std::map<Monomial, GradedPoly>> reduction_;
};

/// Val^{SO(n)} = Q[t]/(t^{n+1}), built independently of the unitary engine.
class SOAlgebra final : public QuotientAlgebra {
public:
    static std::shared_ptr<const SOAlgebra> build(int n);

    AlgebraId id() const override { return {Family::kOrthogonal, n_}; }
    int top_degree() const override { return n_; }
    const std::vector<Monomial>& basis(int degree) const override;
    /// Throws AlgebraMismatch if p involves s.
    GradedPoly normal_form(const GradedPoly& p) const override;

    int n() const noexcept { return n_; }

private:
    explicit SOAlgebra(int n);

    int n_;
    std::vector<std::vector<Monomial>> basis_;
};

/// An element of a quotient algebra held in normal form.
class AlgebraElement {
public:
    AlgebraElement(std::shared_ptr<const QuotientAlgebra> algebra, GradedPoly normal)
        : algebra_(std::move(algebra)), poly_(std::move(normal)) {}

    const QuotientAlgebra& algebra() const { return *algebra_; }
    std::shared_ptr<const QuotientAlgebra> algebra_ptr() const { return algebra_; }
    const GradedPoly& poly() const noexcept { return poly_; }
    bool is_zero() const noexcept { return poly_.is_zero(); }
    std::string to_string() const { return poly_.to_string(); }

    friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
        return a.algebra_->id() == b.algebra_->id() && a.poly_ == b.poly_;
    }

private:
    std::shared_ptr<const QuotientAlgebra> algebra_;
    GradedPoly poly_;
};

/// Shared, lazily built Val^{U(n)}. Thread-safe.
std::shared_ptr<const UnitaryAlgebra> unitary_algebra(int n);
std::shared_ptr<const SOAlgebra> so_algebra(int n);
/// Replaces the cached Val^{U(n)}; used to inject corrupted tables in tests.
void install_unitary_algebra(std::shared_ptr<const UnitaryAlgebra> algebra);
void clear_algebra_cache();

AlgebraElement normal_form(const QuotientAlgebra& algebra, const GradedPoly& p);
/// Throws AlgebraMismatch when a and b live in different algebras.
AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b);
/// Val^{U(n)} -> Val^{U(m)}, s -> s, t -> t. Requires 1 <= m <= n.
AlgebraElement restrict(const AlgebraElement& a, int m);
/// Val^{U(n)} -> Val^{U(n+1)}, x -> s x (the inclusion with its scalar dropped).
AlgebraElement step_up_s(const AlgebraElement& a);

/// Elements (n-i) s^i t^{j-2i} - (4n-4i-2) s^{i+1} t^{j-2i-2} spanning the
/// degree-j annihilator of t^{2n-j}. Requires 2 <= j <= 2n-2; Val^{U(1)}
/// has no such degree and yields an empty list.
std::vector<AlgebraElement> annihilator_basis(const UnitaryAlgebra& algebra, int j);
/// Same span, but total in j: empty wherever the annihilator is zero.
std::vector<AlgebraElement> annihilator_span(const UnitaryAlgebra& algebra, int j);

/// Coefficient of x^d in (1-x^{n+1})(1-x^{n+2}) / ((1-x)(1-x^2)).
long poincare_coefficient(int n, int degree);

}  // namespace uval
