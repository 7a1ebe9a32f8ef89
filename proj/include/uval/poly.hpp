#pragma once

#include <compare>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "uval/rational.hpp"

namespace uval {

/// s^s_exp * t^t_exp with deg s = 2 and deg t = 1.
struct Monomial {
    int s_exp = 0;
    int t_exp = 0;

    constexpr int degree() const noexcept { return 2 * s_exp + t_exp; }

    friend constexpr bool operator==(const Monomial&, const Monomial&) = default;
    // Ascending degree; inside a degree, descending power of s (s^2, s t^2, t^4).
    friend constexpr std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
        if (auto c = a.degree() <=> b.degree(); c != 0) return c;
        return b.s_exp <=> a.s_exp;
    }

    friend constexpr Monomial operator*(const Monomial& a, const Monomial& b) {
        return {a.s_exp + b.s_exp, a.t_exp + b.t_exp};
    }

    /// "1", "t", "s*t^2", "s^2".
    std::string to_string() const;
    /// "1", "t", "st^2", "s^2".
    std::string to_latex() const;
};

/// All monomials of a given degree ordered by ascending power of s: t^d, s t^{d-2}, ...
std::vector<Monomial> monomials_of_degree(int degree);

/// Finitely supported rational combination of monomials in s, t. No zero
/// coefficient is ever stored.
class GradedPoly {
public:
    using Terms = std::map<Monomial, Rational>;

    GradedPoly() = default;
    GradedPoly(const Rational& constant);  // NOLINT(google-explicit-constructor)
    GradedPoly(Monomial m, const Rational& coefficient = Rational(1));

    static GradedPoly s() { return GradedPoly(Monomial{1, 0}); }
    static GradedPoly t() { return GradedPoly(Monomial{0, 1}); }

    /// Parses e.g. "s - 1/2*t^2". Throws ParseError.
    static GradedPoly parse(std::string_view text);

    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    Rational coefficient(const Monomial& m) const;
    /// -1 for the zero polynomial.
    int max_degree() const;
    bool is_homogeneous() const;
    GradedPoly homogeneous_component(int degree) const;

    /// Adds c * m in place.
    void add_term(const Monomial& m, const Rational& c);

    GradedPoly& operator+=(const GradedPoly& other);
    GradedPoly& operator-=(const GradedPoly& other);
    GradedPoly& operator*=(const Rational& c);

    friend GradedPoly operator+(GradedPoly a, const GradedPoly& b) { return a += b; }
    friend GradedPoly operator-(GradedPoly a, const GradedPoly& b) { return a -= b; }
    friend GradedPoly operator-(GradedPoly a) { return a *= Rational(-1); }
    friend GradedPoly operator*(GradedPoly a, const Rational& c) { return a *= c; }
    friend GradedPoly operator*(const Rational& c, GradedPoly a) { return a *= c; }
    friend GradedPoly operator*(const GradedPoly& a, const GradedPoly& b);
    friend bool operator==(const GradedPoly&, const GradedPoly&) = default;

    /// Product with every term of degree above max_degree dropped.
    static GradedPoly truncated_product(const GradedPoly& a, const GradedPoly& b, int max_degree);

    /// Plain text, re-readable by parse: "s - 1/2*t^2".
    std::string to_string() const;
    /// "-\frac{1}{2}s^2 + st^2 - \frac{1}{4}t^4".
    std::string to_latex() const;

private:
    Terms terms_;
};

GradedPoly pow(const GradedPoly& base, int exponent);

/// f_1 .. f_max_degree, the homogeneous components of log(1 + s + t),
/// expanded from the series sum (-1)^{m+1} (s+t)^m / m. Index 0 holds f_1.
std::vector<GradedPoly> log_series_f(int max_degree);

enum class ClosedFormVariant {
    // (-1)^i / (k-i) * C(k-i, i)
    kOverKMinusI,
    // (-1)^i / (k-2i) * C(k-i-1, i)
    kOverKMinus2I,
};

/// f_k = (-1)^{k+1} sum_i coeff_i s^i t^{k-2i}.
GradedPoly f_closed_form(int k, ClosedFormVariant variant = ClosedFormVariant::kOverKMinusI);

/// k s f_k + (k+1) t f_{k+1} + (k+2) f_{k+2} == 0.
bool check_f_recursion(int k);

}  // namespace uval
