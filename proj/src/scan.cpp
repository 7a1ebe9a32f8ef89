#include "uval/scan.hpp"

#include <stdexcept>

#include "uval/algebra.hpp"
#include "uval/duality.hpp"
#include "uval/parallel.hpp"

namespace uval {

std::vector<std::pair<int, int>> pairing_indices(int n_max) {
    if (n_max < 1) throw std::domain_error("scan bound must be >= 1");
    std::vector<std::pair<int, int>> out;
    for (int n = 1; n <= n_max; ++n)
        for (int k = 0; 2 * k <= n; ++k) out.emplace_back(n, k);
    return out;
}

namespace {

PositivityRow positivity_row(int n, int k) {
    const ExactMatrix q = q_matrix(n, k);
    PositivityRow row{n, k, q.rows(), false, leading_minors(q)};
    row.positive_definite = is_positive_definite(q);
    return row;
}

// Algebras are built up front so the parallel loop only reads the cache.
void warm_algebras(int n_max) {
    for (int n = 1; n <= n_max; ++n) unitary_algebra(n);
}

}  // namespace

std::vector<PositivityRow> positivity_scan(int n_max) {
    const auto idx = pairing_indices(n_max);
    warm_algebras(n_max);
    return parallel_map<PositivityRow>(idx.size(), [&](std::size_t i) { return positivity_row(idx[i].first, idx[i].second); });
}

std::vector<PositivityRow> positivity_scan_serial(int n_max) {
    const auto idx = pairing_indices(n_max);
    return serial_map<PositivityRow>(idx.size(), [&](std::size_t i) { return positivity_row(idx[i].first, idx[i].second); });
}

std::vector<ExactMatrix> q_matrices(int n_max) {
    const auto idx = pairing_indices(n_max);
    warm_algebras(n_max);
    return parallel_map<ExactMatrix>(idx.size(), [&](std::size_t i) { return q_matrix(idx[i].first, idx[i].second); });
}

std::vector<ExactMatrix> q_matrices_serial(int n_max) {
    const auto idx = pairing_indices(n_max);
    return serial_map<ExactMatrix>(idx.size(), [&](std::size_t i) { return q_matrix(idx[i].first, idx[i].second); });
}

}  // namespace uval
