#include "uval/poly.hpp"

#include <cctype>
#include <stdexcept>

#include "uval/error.hpp"

namespace uval {

std::string Monomial::to_string() const {
    std::string out;
    if (s_exp > 0) out += s_exp == 1 ? "s" : "s^" + std::to_string(s_exp);
    if (t_exp > 0) {
        if (!out.empty()) out += "*";
        out += t_exp == 1 ? "t" : "t^" + std::to_string(t_exp);
    }
    return out.empty() ? "1" : out;
}

namespace {

// Braces only where TeX needs them: t^4 but t^{12}.
std::string latex_power(char symbol, int exp) {
    std::string out(1, symbol);
    if (exp == 1) return out;
    const std::string digits = std::to_string(exp);
    return out + "^" + (digits.size() == 1 ? digits : "{" + digits + "}");
}

}  // namespace

std::string Monomial::to_latex() const {
    std::string out;
    if (s_exp > 0) out += latex_power('s', s_exp);
    if (t_exp > 0) out += latex_power('t', t_exp);
    return out.empty() ? "1" : out;
}

std::vector<Monomial> monomials_of_degree(int degree) {
    std::vector<Monomial> out;
    for (int p = 0; 2 * p <= degree; ++p) out.push_back({p, degree - 2 * p});
    return out;
}

GradedPoly::GradedPoly(const Rational& constant) {
    if (!constant.is_zero()) terms_.emplace(Monomial{}, constant);
}

GradedPoly::GradedPoly(Monomial m, const Rational& coefficient) {
    if (m.s_exp < 0 || m.t_exp < 0) throw std::domain_error("negative exponent");
    if (!coefficient.is_zero()) terms_.emplace(m, coefficient);
}

Rational GradedPoly::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

int GradedPoly::max_degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first.degree(); }

bool GradedPoly::is_homogeneous() const {
    return terms_.empty() || terms_.begin()->first.degree() == terms_.rbegin()->first.degree();
}

GradedPoly GradedPoly::homogeneous_component(int degree) const {
    GradedPoly out;
    for (const auto& [m, c] : terms_)
        if (m.degree() == degree) out.terms_.emplace(m, c);
    return out;
}

void GradedPoly::add_term(const Monomial& m, const Rational& c) {
    if (c.is_zero()) return;
    if (m.s_exp < 0 || m.t_exp < 0) throw std::domain_error("negative exponent");
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

GradedPoly& GradedPoly::operator+=(const GradedPoly& other) {
    for (const auto& [m, c] : other.terms_) add_term(m, c);
    return *this;
}

GradedPoly& GradedPoly::operator-=(const GradedPoly& other) {
    for (const auto& [m, c] : other.terms_) add_term(m, -c);
    return *this;
}

GradedPoly& GradedPoly::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, coeff] : terms_) coeff *= c;
    return *this;
}

GradedPoly operator*(const GradedPoly& a, const GradedPoly& b) {
    GradedPoly out;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
    return out;
}

GradedPoly GradedPoly::truncated_product(const GradedPoly& a, const GradedPoly& b, int max_degree) {
    GradedPoly out;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) {
            const Monomial m = ma * mb;
            if (m.degree() <= max_degree) out.add_term(m, ca * cb);
        }
    return out;
}

GradedPoly pow(const GradedPoly& base, int exponent) {
    if (exponent < 0) throw std::domain_error("negative power of a polynomial");
    GradedPoly out(Rational(1));
    for (int i = 0; i < exponent; ++i) out = out * base;
    return out;
}

namespace {

template <class CoefficientFn, class MonomialFn>
std::string format_terms(const GradedPoly::Terms& terms, CoefficientFn coeff_text, MonomialFn mono_text,
                         const char* joiner) {
    if (terms.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms) {
        const bool negative = c.sign() < 0;
        if (first) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        first = false;
        const Rational mag = negative ? -c : c;
        const bool unit = mag == Rational(1);
        if (m == Monomial{}) {
            out += coeff_text(mag);
        } else if (unit) {
            out += mono_text(m);
        } else {
            out += coeff_text(mag);
            out += joiner;
            out += mono_text(m);
        }
    }
    return out;
}

class PolyParser {
public:
    explicit PolyParser(std::string_view text) : text_(text) {}

    GradedPoly parse() {
        GradedPoly out;
        skip_ws();
        if (at_end()) throw ParseError(pos_, "term");
        bool first = true;
        while (!at_end()) {
            Rational sign(1);
            if (peek() == '+' || peek() == '-') {
                if (peek() == '-') sign = Rational(-1);
                ++pos_;
                skip_ws();
            } else if (!first) {
                throw ParseError(pos_, "'+' or '-'");
            }
            first = false;
            out += parse_term() * sign;
            skip_ws();
        }
        return out;
    }

private:
    GradedPoly parse_term() {
        GradedPoly term = parse_factor();
        skip_ws();
        while (!at_end() && peek() == '*') {
            ++pos_;
            skip_ws();
            term = term * parse_factor();
            skip_ws();
        }
        return term;
    }

    GradedPoly parse_factor() {
        if (at_end()) throw ParseError(pos_, "number, 's' or 't'");
        const char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c))) return GradedPoly(parse_number());
        if (c == 's' || c == 't') {
            ++pos_;
            skip_ws();
            int exponent = 1;
            if (!at_end() && peek() == '^') {
                ++pos_;
                skip_ws();
                exponent = parse_exponent();
            }
            return GradedPoly(c == 's' ? Monomial{exponent, 0} : Monomial{0, exponent});
        }
        throw ParseError(pos_, "number, 's' or 't'");
    }

    Rational parse_number() {
        const std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        std::string_view num = text_.substr(start, pos_ - start);
        skip_ws();
        if (!at_end() && peek() == '/') {
            ++pos_;
            skip_ws();
            const std::size_t den_start = pos_;
            while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
            if (pos_ == den_start) throw ParseError(pos_, "denominator digits");
            const mpz_class den(std::string(text_.substr(den_start, pos_ - den_start)));
            if (den == 0) throw ParseError(den_start, "nonzero denominator");
            return Rational(mpz_class(std::string(num)), den);
        }
        return Rational(mpz_class(std::string(num)));
    }

    int parse_exponent() {
        const std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (pos_ == start) throw ParseError(pos_, "exponent digits");
        if (pos_ - start > 6) throw ParseError(start, "exponent below 1000000");
        return std::stoi(std::string(text_.substr(start, pos_ - start)));
    }

    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

GradedPoly GradedPoly::parse(std::string_view text) { return PolyParser(text).parse(); }

std::string GradedPoly::to_string() const {
    return format_terms(terms_, [](const Rational& r) { return r.to_string(); },
                        [](const Monomial& m) { return m.to_string(); }, "*");
}

std::string GradedPoly::to_latex() const {
    return format_terms(terms_, [](const Rational& r) { return r.to_latex(); },
                        [](const Monomial& m) { return m.to_latex(); }, "");
}

std::vector<GradedPoly> log_series_f(int max_degree) {
    if (max_degree < 1) throw std::domain_error("log_series_f needs max_degree >= 1");
    const GradedPoly base = GradedPoly::s() + GradedPoly::t();
    GradedPoly series;
    GradedPoly power(Rational(1));
    for (int m = 1; m <= max_degree; ++m) {
        // (s+t)^m has minimum degree m, so stopping at max_degree is exact.
        power = GradedPoly::truncated_product(power, base, max_degree);
        series += power * Rational(m % 2 == 1 ? 1 : -1, m);
    }
    std::vector<GradedPoly> out;
    out.reserve(static_cast<std::size_t>(max_degree));
    for (int k = 1; k <= max_degree; ++k) out.push_back(series.homogeneous_component(k));
    return out;
}

GradedPoly f_closed_form(int k, ClosedFormVariant variant) {
    if (k < 1) throw std::domain_error("f_closed_form needs k >= 1");
    GradedPoly out;
    const Rational outer(k % 2 == 1 ? 1 : -1);  // (-1)^{k+1}
    for (int i = 0; 2 * i <= k; ++i) {
        const Rational sign(i % 2 == 0 ? 1 : -1);
        Rational c;
        if (variant == ClosedFormVariant::kOverKMinusI) {
            c = binomial(k - i, i) / Rational(k - i);
        } else if (k == 2 * i) {
            // C(i-1, i)/0 is undefined here; the first variant gives 1/i.
            c = Rational(1, i);
        } else {
            c = binomial(k - i - 1, i) / Rational(k - 2 * i);
        }
        out.add_term({i, k - 2 * i}, outer * sign * c);
    }
    return out;
}

bool check_f_recursion(int k) {
    if (k < 1) throw std::domain_error("check_f_recursion needs k >= 1");
    const auto f = log_series_f(k + 2);
    const GradedPoly lhs = Rational(k) * GradedPoly::s() * f[k - 1] + Rational(k + 1) * GradedPoly::t() * f[k] +
                           Rational(k + 2) * f[k + 1];
    return lhs.is_zero();
}

}  // namespace uval
