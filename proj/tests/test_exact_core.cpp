#include <random>

#include <doctest.h>

#include "oracle.hpp"
#include "uval/error.hpp"
#include "uval/matrix.hpp"
#include "uval/rational.hpp"

using uval::ExactMatrix;
using uval::Rational;

namespace {

ExactMatrix random_matrix(std::mt19937& rng, std::size_t n, bool symmetric) {
    std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
    ExactMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = symmetric ? i : 0; j < n; ++j) {
            m(i, j) = Rational(num(rng), den(rng));
            if (symmetric) m(j, i) = m(i, j);
        }
    return m;
}

oracle::Mat to_oracle(const ExactMatrix& m) {
    oracle::Mat out(m.rows(), std::vector<oracle::Q>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j).get();
    return out;
}

}  // namespace

TEST_CASE("rational arithmetic is exact and canonical") {
    REQUIRE(Rational(2, 4) == Rational(1, 2));
    REQUIRE(Rational(3, -6).to_string() == "-1/2");
    REQUIRE(Rational(6, 3).to_string() == "2");
    REQUIRE(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    REQUIRE(Rational(2, 3) * Rational(9, 4) == Rational(3, 2));
    REQUIRE(Rational(1, 3) - Rational(1, 2) == Rational(-1, 6));
    REQUIRE(Rational(-3, 4).to_latex() == "-\\frac{3}{4}");
    REQUIRE(Rational::parse("-10/4") == Rational(-5, 2));
    REQUIRE(Rational::parse("7") == Rational(7));
    CHECK_THROWS_AS(Rational::parse("1/0"), uval::ParseError);
    CHECK_THROWS_AS(Rational::parse("x"), uval::ParseError);
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
    REQUIRE(uval::binomial(5, 3) == Rational(10));
    REQUIRE(uval::binomial(3, 5) == Rational(0));
    REQUIRE(uval::power(Rational(-2), -3) == Rational(-1, 8));

    // No overflow: 60! / 59! computed through large intermediates.
    Rational big(1);
    for (int i = 1; i <= 60; ++i) big *= Rational(i);
    Rational smaller(1);
    for (int i = 1; i <= 59; ++i) smaller *= Rational(i);
    REQUIRE(big / smaller == Rational(60));
}

TEST_CASE("mat_inverse examples") {
    REQUIRE(uval::mat_inverse(ExactMatrix::identity(3)) == ExactMatrix::identity(3));
    const ExactMatrix p{{1, Rational(1, 3)}, {Rational(1, 3), Rational(1, 6)}};
    REQUIRE(uval::mat_inverse(p) == ExactMatrix{{3, -6}, {-6, 18}});
    REQUIRE(uval::determinant(p) == Rational(1, 18));
    CHECK_THROWS_AS(uval::mat_inverse(ExactMatrix{{1, 2}, {2, 4}}), uval::SingularMatrix);
    CHECK_THROWS_AS(uval::mat_inverse(ExactMatrix(2, 3)), uval::DimensionMismatch);
}

TEST_CASE("mat_inverse on random matrices") {
    std::mt19937 rng(20240611);
    int invertible = 0;
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 1 + static_cast<std::size_t>(trial % 7);
        const ExactMatrix m = random_matrix(rng, n, false);
        if (uval::determinant(m).is_zero()) {
            CHECK_THROWS_AS(uval::mat_inverse(m), uval::SingularMatrix);
            continue;
        }
        ++invertible;
        const ExactMatrix inv = uval::mat_inverse(m);
        REQUIRE(m * inv == ExactMatrix::identity(n));
        REQUIRE(inv * m == ExactMatrix::identity(n));
        REQUIRE(uval::mat_inverse(inv) == m);
        const auto ref = oracle::inverse(to_oracle(m));
        REQUIRE(ref.has_value());
        REQUIRE(to_oracle(inv) == *ref);
    }
    REQUIRE(invertible > 40);
}

TEST_CASE("solve_in_span") {
    using uval::Vector;
    auto r = uval::solve_in_span({{1, 0}}, {3, 0});
    REQUIRE(r.has_value());
    REQUIRE(*r == Vector{3});
    REQUIRE_FALSE(uval::solve_in_span({{1, 0}}, {0, 1}).has_value());

    // Degree-4 slice of Val^U(2) in coordinates (s^2, s t^2, t^4): t f_3 and f_4.
    // s^2 - t^4/6 lies in the ideal, which is the reduction s^2 = t^4/6.
    const Vector t_f3{0, -1, Rational(1, 3)};
    const Vector f4{Rational(-1, 2), 1, Rational(-1, 4)};
    r = uval::solve_in_span({t_f3, f4}, {1, 0, Rational(-1, 6)});
    REQUIRE(r.has_value());
    REQUIRE(*r == Vector{-2, -2});
    REQUIRE_FALSE(uval::solve_in_span({t_f3, f4}, {1, 0, 0}).has_value());

    // Dependent generators still yield a valid combination.
    r = uval::solve_in_span({{1, 1}, {2, 2}}, {3, 3});
    REQUIRE(r.has_value());
    REQUIRE((*r)[0] + 2 * (*r)[1] == Rational(3));
    CHECK_THROWS_AS(uval::solve_in_span({{1, 0}}, {1, 0, 0}), uval::DimensionMismatch);
}

TEST_CASE("is_positive_definite examples") {
    REQUIRE(uval::is_positive_definite(ExactMatrix::identity(2)));
    REQUIRE(uval::is_positive_definite(ExactMatrix{{3, -6}, {-6, 18}}));
    REQUIRE(uval::leading_minors(ExactMatrix{{3, -6}, {-6, 18}}) == uval::Vector{3, 18});
    REQUIRE_FALSE(uval::is_positive_definite(ExactMatrix{{0, 1}, {1, 0}}));
    CHECK_THROWS_AS(uval::is_positive_definite(ExactMatrix{{1, 2}, {3, 4}}), uval::NotSymmetric);
}

TEST_CASE("is_positive_definite agrees with an LDLT oracle") {
    std::mt19937 rng(7);
    int positive = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 1 + static_cast<std::size_t>(trial % 8);
        ExactMatrix m = random_matrix(rng, n, true);
        // Half the trials are shifted to be diagonally dominant, so both outcomes occur.
        if (trial % 2 == 0)
            for (std::size_t i = 0; i < n; ++i) m(i, i) += Rational(static_cast<std::int64_t>(10 * n));
        const bool expected = oracle::ldlt_positive_definite(to_oracle(m));
        positive += expected;
        REQUIRE(uval::is_positive_definite(m) == expected);
    }
    REQUIRE(positive >= 100);
    REQUIRE(positive < 200);
}

TEST_CASE("matrix helpers") {
    const ExactMatrix a{{1, 2}, {3, 4}};
    REQUIRE(a.transpose() == ExactMatrix{{1, 3}, {2, 4}});
    REQUIRE(uval::rank(ExactMatrix{{1, 2}, {2, 4}}) == 1);
    REQUIRE(uval::block_diagonal(ExactMatrix{{1}}, a) == ExactMatrix{{1, 0, 0}, {0, 1, 2}, {0, 3, 4}});
    REQUIRE(a.block(1, 0, 1, 2) == ExactMatrix{{3, 4}});
    CHECK_THROWS_AS(a * ExactMatrix(3, 1), uval::DimensionMismatch);
}
