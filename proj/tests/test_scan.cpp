#include <doctest.h>

#include "oracle.hpp"
#include "uval/duality.hpp"
#include "uval/scan.hpp"

TEST_CASE("pairing indices") {
    const auto idx = uval::pairing_indices(3);
    REQUIRE(idx == std::vector<std::pair<int, int>>{{1, 0}, {2, 0}, {2, 1}, {3, 0}, {3, 1}});
}

TEST_CASE("positivity scan examples") {
    const auto rows = uval::positivity_scan(3);
    REQUIRE(rows.size() == 5);
    REQUIRE(rows[0].n == 1);
    REQUIRE(rows[0].positive_definite);
    REQUIRE(rows[2].n == 2);
    REQUIRE(rows[2].k == 1);
    REQUIRE(rows[2].minors == uval::Vector{3, 18});
    REQUIRE(rows[4].minors == uval::Vector{10, 100});
    for (const auto& r : rows) REQUIRE(r.positive_definite);
}

TEST_CASE("parallel kernels match the serial reference") {
    REQUIRE(uval::positivity_scan(12) == uval::positivity_scan_serial(12));
    REQUIRE(uval::q_matrices(10) == uval::q_matrices_serial(10));
}

TEST_CASE("every Q^n_k up to n = 12 is positive definite, confirmed by LDLT") {
    const auto rows = uval::positivity_scan(12);
    const auto idx = uval::pairing_indices(12);
    REQUIRE(rows.size() == idx.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        REQUIRE(rows[i].positive_definite);
        const auto q = uval::q_matrix(idx[i].first, idx[i].second);
        oracle::Mat m(q.rows(), std::vector<oracle::Q>(q.cols()));
        for (std::size_t r = 0; r < q.rows(); ++r)
            for (std::size_t c = 0; c < q.cols(); ++c) m[r][c] = q(r, c).get();
        REQUIRE(oracle::ldlt_positive_definite(m));
    }
}
