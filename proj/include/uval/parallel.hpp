#pragma once

#include <cstddef>
#include <exception>
#include <vector>

namespace uval {

/// Evaluates f(0) .. f(count-1) across OpenMP threads and returns the results
/// in index order. The first exception (by index) is rethrown after the loop.
template <class Result, class F>
std::vector<Result> parallel_map(std::size_t count, F&& f) {
    std::vector<Result> out(count);
    std::vector<std::exception_ptr> errors(count);
    const auto n = static_cast<long>(count);
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < n; ++i) {
        try {
            out[static_cast<std::size_t>(i)] = f(static_cast<std::size_t>(i));
        } catch (...) {
            errors[static_cast<std::size_t>(i)] = std::current_exception();
        }
    }
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    return out;
}

/// Serial reference for parallel_map.
template <class Result, class F>
std::vector<Result> serial_map(std::size_t count, F&& f) {
    std::vector<Result> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) out.push_back(f(i));
    return out;
}

}  // namespace uval
