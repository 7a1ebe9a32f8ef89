#pragma once

#include <utility>
#include <vector>

#include "uval/matrix.hpp"

namespace uval {

struct PositivityRow {
    int n = 0;
    int k = 0;
    std::size_t dim = 0;
    bool positive_definite = false;
    Vector minors;

    friend bool operator==(const PositivityRow&, const PositivityRow&) = default;
};

/// All (n, k) with 0 <= 2k <= n, 1 <= n <= n_max, ordered by n then k.
std::vector<std::pair<int, int>> pairing_indices(int n_max);

/// Positive definiteness of every Q^n_k with n <= n_max, one thread per (n, k).
std::vector<PositivityRow> positivity_scan(int n_max);
/// Single-threaded reference of positivity_scan.
std::vector<PositivityRow> positivity_scan_serial(int n_max);

/// Q^n_k for every index of pairing_indices(n_max), computed in parallel.
std::vector<ExactMatrix> q_matrices(int n_max);
std::vector<ExactMatrix> q_matrices_serial(int n_max);

}  // namespace uval
