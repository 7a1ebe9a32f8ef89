// Serial vs OpenMP timings for the positivity scan and the identity suite.
//
//   bench_scan [n_max]

#include <chrono>
#include <cstdlib>
#include <iostream>

#include <omp.h>

#include "uval/algebra.hpp"
#include "uval/scan.hpp"
#include "uval/suite.hpp"

namespace {

template <class F>
double time_ms(F&& f) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
    const int n_max = argc > 1 ? std::atoi(argv[1]) : 16;
    std::cout << "threads " << omp_get_max_threads() << ", n_max " << n_max << '\n';

    uval::clear_algebra_cache();
    const double build = time_ms([&] {
        for (int n = 1; n <= n_max + 1; ++n) uval::unitary_algebra(n);
    });
    std::cout << "algebra build      " << build << " ms\n";

    const double scan_serial = time_ms([&] { uval::positivity_scan_serial(n_max); });
    const double scan_parallel = time_ms([&] { uval::positivity_scan(n_max); });
    std::cout << "positivity serial   " << scan_serial << " ms\n"
              << "positivity parallel " << scan_parallel << " ms\n";

    const int suite_n = n_max < 12 ? n_max : 12;
    const double suite_serial = time_ms([&] { uval::run_suite({suite_n, false}); });
    const double suite_parallel = time_ms([&] { uval::run_suite({suite_n, true}); });
    std::cout << "suite serial        " << suite_serial << " ms (n_max " << suite_n << ")\n"
              << "suite parallel      " << suite_parallel << " ms\n";
}
