#pragma once

#include <string>
#include <vector>

#include "uval/rational.hpp"

namespace uval {

/// Univariate polynomial in z over the rationals; coefficients ascending,
/// trailing zeros trimmed so the leading coefficient is nonzero.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rational> coefficients);

    static UniPoly constant(const Rational& c) { return UniPoly({c}); }
    /// z - root
    static UniPoly linear(const Rational& root) { return UniPoly({-root, Rational(1)}); }
    /// z (z-1) ... (z-k+1); the empty product 1 when k = 0.
    static UniPoly falling_factorial(int k);

    const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }

    Rational operator()(const Rational& z) const;
    /// p(z - shift), by Taylor expansion with binomial coefficients.
    UniPoly shifted(const Rational& shift) const;
    /// Difference operator: p(z) - p(z-1).
    UniPoly delta() const;

    UniPoly& operator+=(const UniPoly& other);
    UniPoly& operator-=(const UniPoly& other);
    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(const Rational& c, const UniPoly& p);
    friend bool operator==(const UniPoly&, const UniPoly&) = default;

    std::string to_string() const;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

/// Delta^{k+1} applied to z(z-1)...(z-k+1) vanishes, and so does the expanded
/// form sum_i (-1)^i C(k+1, i) (z-i)(z-i-1)...(z-i-k+1).
bool difference_identity_check(int k);

/// The rational form of the same identity for fixed n:
/// sum_{i=0}^{k+1} (-1)^i C(k+1,i) prod_{j=i}^{k} (2n-2j-1) / prod_{j=0}^{k-i} (2n-2k-2i-1-2j) = 0,
/// where the (k+1)st term is (-1)^{k+1}. Requires 2k <= n-1.
bool reduction_identity_check(int n, int k);

}  // namespace uval
