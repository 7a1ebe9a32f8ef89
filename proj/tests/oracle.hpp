#pragma once
// Reference computations for the tests. Deliberately independent of the
// library: raw mpq_class, its own elimination, its own f_k expansion, and the
// top-degree functional instead of reduction tables.

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace oracle {

using Q = mpq_class;
using Mat = std::vector<std::vector<Q>>;
// (power of s, power of t) -> coefficient
using Poly = std::map<std::pair<int, int>, Q>;

inline Q binom(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Q(r);
}

// f_k from the (-1)^i/(k-2i) C(k-i-1, i) form, with the k = 2i term read as
// its limit (-1)^i / i.
inline Poly f(int k) {
    Poly out;
    const int sign = (k % 2 == 1) ? 1 : -1;
    for (int i = 0; 2 * i <= k; ++i) {
        Q c;
        const int alt = (i % 2 == 0) ? 1 : -1;
        if (k == 2 * i)
            c = Q(alt, i);
        else
            c = Q(alt) / Q(k - 2 * i) * binom(k - i - 1, i);
        c *= sign;
        c.canonicalize();
        if (c != 0) out[{i, k - 2 * i}] = c;
    }
    return out;
}

// f_k as the degree-k part of log(1 + s + t) by the multinomial formula:
// sum over a + b = m of (-1)^{m+1}/m * C(m, a) s^a t^b, restricted to 2a + b = k.
inline Poly f_multinomial(int k) {
    Poly out;
    for (int a = 0; 2 * a <= k; ++a) {
        const int b = k - 2 * a;
        const int m = a + b;
        Q c = binom(m, a) / Q(m);
        if (m % 2 == 0) c = -c;
        if (c != 0) out[{a, b}] = c;
    }
    return out;
}

// Reduced row echelon form in place; returns pivot columns.
inline std::vector<std::size_t> rref(Mat& m) {
    std::vector<std::size_t> pivots;
    if (m.empty()) return pivots;
    const std::size_t cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
        std::size_t p = r;
        while (p < m.size() && m[p][c] == 0) ++p;
        if (p == m.size()) continue;
        std::swap(m[p], m[r]);
        const Q inv = 1 / m[r][c];
        for (auto& x : m[r]) x *= inv;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == r || m[i][c] == 0) continue;
            const Q factor = m[i][c];
            for (std::size_t j = 0; j < cols; ++j) m[i][j] -= factor * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

// The functional on degree-2n monomials s^p t^{2n-2p} (p = 0..n) that kills
// the ideal slice and sends t^{2n} to 1. lambda[p] is the top coefficient of
// s^p t^{2n-2p} in Val^U(n).
inline std::vector<Q> top_functional(int n) {
    const int d = 2 * n;
    Mat rows;
    for (int g = n + 1; g <= n + 2; ++g) {
        const Poly fg = f(g);
        const int shift = d - g;
        for (int a = 0; 2 * a <= shift; ++a) {
            std::vector<Q> row(static_cast<std::size_t>(n + 1));
            for (const auto& [m, c] : fg) row[static_cast<std::size_t>(m.first + a)] += c;
            rows.push_back(row);
        }
    }
    // Kernel of the slice: columns ordered p = n..0 so t^{2n} is the free column.
    Mat m;
    for (const auto& row : rows) m.emplace_back(row.rbegin(), row.rend());
    const auto pivots = rref(m);
    std::vector<Q> rev(static_cast<std::size_t>(n + 1));
    rev[static_cast<std::size_t>(n)] = 1;  // p = 0
    for (std::size_t r = 0; r < pivots.size(); ++r) rev[pivots[r]] = -m[r][static_cast<std::size_t>(n)];
    return {rev.rbegin(), rev.rend()};
}

// P^n_k entry (i, j) = lambda(s^{i+j} t^{2n-2i-2j}).
inline Mat pairing(int n, int k) {
    const auto lambda = top_functional(n);
    Mat p(static_cast<std::size_t>(k + 1), std::vector<Q>(static_cast<std::size_t>(k + 1)));
    for (int i = 0; i <= k; ++i)
        for (int j = 0; j <= k; ++j) p[i][j] = lambda[static_cast<std::size_t>(i + j)];
    return p;
}

inline std::optional<Mat> inverse(const Mat& a) {
    const std::size_t n = a.size();
    Mat aug(n, std::vector<Q>(2 * n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug[i][j] = a[i][j];
        aug[i][n + i] = 1;
    }
    const auto pivots = rref(aug);
    if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
    Mat inv(n, std::vector<Q>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
    return inv;
}

// Coefficient of x^d in (1-x^{n+1})(1-x^{n+2}) / ((1-x)(1-x^2)) by explicit
// series multiplication.
inline std::vector<long> poincare_series(int n, int max_degree) {
    const std::size_t len = static_cast<std::size_t>(max_degree + 1);
    std::vector<long> geo1(len, 1), geo2(len);
    for (std::size_t d = 0; d < len; d += 2) geo2[d] = 1;
    auto mul = [&](const std::vector<long>& a, const std::vector<long>& b) {
        std::vector<long> c(len);
        for (std::size_t i = 0; i < len; ++i)
            for (std::size_t j = 0; i + j < len; ++j) c[i + j] += a[i] * b[j];
        return c;
    };
    std::vector<long> f1(len), f2(len);
    f1[0] = f2[0] = 1;
    if (static_cast<std::size_t>(n + 1) < len) f1[static_cast<std::size_t>(n + 1)] = -1;
    if (static_cast<std::size_t>(n + 2) < len) f2[static_cast<std::size_t>(n + 2)] = -1;
    return mul(mul(mul(f1, f2), geo1), geo2);
}

// Positive definiteness by exact LDL^T: every pivot must be positive.
inline bool ldlt_positive_definite(Mat a) {
    const std::size_t n = a.size();
    for (std::size_t k = 0; k < n; ++k) {
        if (a[k][k] <= 0) return false;
        for (std::size_t i = k + 1; i < n; ++i) {
            const Q l = a[i][k] / a[k][k];
            for (std::size_t j = k + 1; j < n; ++j) a[i][j] -= l * a[k][j];
        }
    }
    return true;
}

}  // namespace oracle
