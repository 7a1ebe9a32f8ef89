#include "uval/unipoly.hpp"

#include <sstream>
#include <stdexcept>

namespace uval {

UniPoly::UniPoly(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

void UniPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

UniPoly UniPoly::falling_factorial(int k) {
    if (k < 0) throw std::domain_error("falling factorial of negative length");
    UniPoly out = constant(Rational(1));
    for (int j = 0; j < k; ++j) out = out * linear(Rational(j));
    return out;
}

Rational UniPoly::operator()(const Rational& z) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
    return acc;
}

UniPoly UniPoly::shifted(const Rational& shift) const {
    // sum_j c_j (z - h)^j = sum_j c_j sum_m C(j,m) z^m (-h)^{j-m}
    std::vector<Rational> out(coeffs_.size());
    const Rational neg = -shift;
    for (std::size_t j = 0; j < coeffs_.size(); ++j) {
        if (coeffs_[j].is_zero()) continue;
        for (std::size_t m = 0; m <= j; ++m)
            out[m] += coeffs_[j] * binomial(static_cast<std::int64_t>(j), static_cast<std::int64_t>(m)) *
                      power(neg, static_cast<std::int64_t>(j - m));
    }
    return UniPoly(std::move(out));
}

UniPoly UniPoly::delta() const { return *this - shifted(Rational(1)); }

UniPoly& UniPoly::operator+=(const UniPoly& other) {
    if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
    trim();
    return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& other) {
    if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
    trim();
    return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return UniPoly(std::move(out));
}

UniPoly operator*(const Rational& c, const UniPoly& p) {
    std::vector<Rational> out = p.coeffs_;
    for (auto& x : out) x *= c;
    return UniPoly(std::move(out));
}

std::string UniPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        if (coeffs_[i].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << coeffs_[i];
        if (i > 0) os << "*z" << (i > 1 ? "^" + std::to_string(i) : "");
    }
    return os.str();
}

bool difference_identity_check(int k) {
    if (k < 1) throw std::domain_error("difference_identity_check needs k >= 1");
    UniPoly p = UniPoly::falling_factorial(k);
    for (int i = 0; i <= k; ++i) p = p.delta();
    if (!p.is_zero()) return false;

    // Expanded binomial form, each shifted falling factorial built from its roots.
    UniPoly sum;
    for (int i = 0; i <= k + 1; ++i) {
        UniPoly term = UniPoly::constant(Rational(1));
        for (int j = 0; j < k; ++j) term = term * UniPoly::linear(Rational(i + j));
        sum += Rational(i % 2 == 0 ? 1 : -1) * binomial(k + 1, i) * term;
    }
    return sum.is_zero();
}

bool reduction_identity_check(int n, int k) {
    if (k < 0 || 2 * k > n - 1) throw std::domain_error("reduction_identity_check needs 0 <= 2k <= n-1");
    Rational sum(0);
    for (int i = 0; i <= k + 1; ++i) {
        Rational term = binomial(k + 1, i) * Rational(i % 2 == 0 ? 1 : -1);
        if (i <= k) {
            for (int j = i; j <= k; ++j) term *= Rational(2 * n - 2 * j - 1);
            for (int f = 2 * n - 2 * k - 2 * i - 1; f >= 2 * n - 4 * k - 1; f -= 2) term /= Rational(f);
        }
        sum += term;
    }
    return sum.is_zero();
}

}  // namespace uval
