#include "uval/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

#include "uval/error.hpp"

namespace uval {

Rational::Rational(std::int64_t value) : value_(mpz_class(std::to_string(value))) {}

Rational::Rational(std::int64_t numerator, std::int64_t denominator)
    : Rational(mpz_class(std::to_string(numerator)), mpz_class(std::to_string(denominator))) {}

Rational::Rational(const mpz_class& numerator, const mpz_class& denominator) {
    if (denominator == 0) throw std::domain_error("zero denominator");
    value_ = mpq_class(numerator, denominator);
    value_.canonicalize();
}

Rational::Rational(const mpz_class& integer) : value_(integer) {}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
    std::size_t pos = 0;
    auto digits = [&](std::size_t start) {
        std::size_t p = start;
        while (p < text.size() && std::isdigit(static_cast<unsigned char>(text[p]))) ++p;
        if (p == start) throw ParseError(start, "digit");
        return p;
    };
    bool negative = false;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
        negative = text[pos] == '-';
        ++pos;
    }
    const std::size_t num_end = digits(pos);
    mpz_class num(std::string(text.substr(pos, num_end - pos)));
    mpz_class den(1);
    pos = num_end;
    if (pos < text.size() && text[pos] == '/') {
        const std::size_t den_end = digits(pos + 1);
        den = mpz_class(std::string(text.substr(pos + 1, den_end - pos - 1)));
        if (den == 0) throw ParseError(pos + 1, "nonzero denominator");
        pos = den_end;
    }
    if (pos != text.size()) throw ParseError(pos, "end of rational");
    if (negative) num = -num;
    return Rational(num, den);
}

std::string Rational::to_string() const {
    if (is_integer()) return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::string Rational::to_latex() const {
    if (is_integer()) return value_.get_num().get_str();
    mpz_class num = value_.get_num();
    const std::string sign = num < 0 ? "-" : "";
    num = abs(num);
    return sign + "\\frac{" + num.get_str() + "}{" + value_.get_den().get_str() + "}";
}

Rational& Rational::operator+=(const Rational& other) {
    value_ += other.value_;
    return *this;
}

Rational& Rational::operator-=(const Rational& other) {
    value_ -= other.value_;
    return *this;
}

Rational& Rational::operator*=(const Rational& other) {
    value_ *= other.value_;
    return *this;
}

Rational& Rational::operator/=(const Rational& other) {
    if (other.is_zero()) throw std::domain_error("division by zero");
    value_ /= other.value_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

Rational binomial(std::int64_t n, std::int64_t k) {
    if (n < 0) throw std::domain_error("binomial with negative n");
    if (k < 0 || k > n) return Rational(0);
    mpz_class out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Rational(out);
}

Rational power(const Rational& base, std::int64_t exponent) {
    Rational result(1);
    Rational factor = exponent < 0 ? Rational(1) / base : base;
    for (std::int64_t e = exponent < 0 ? -exponent : exponent; e > 0; e >>= 1) {
        if (e & 1) result *= factor;
        factor *= factor;
    }
    return result;
}

}  // namespace uval
