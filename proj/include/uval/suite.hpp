#pragma once

#include <string>
#include <vector>

namespace uval {

struct SuiteEntry {
    std::string name;
    /// The identity checked, written out as a formula.
    std::string anchor;
    std::string range;
    std::size_t cases = 0;
    bool passed = true;
    /// First failing parameter set and the offending exact value; empty on pass.
    std::string counterexample;
};

struct SuiteReport {
    int n_max = 0;
    std::vector<SuiteEntry> entries;

    std::size_t passed() const;
    std::size_t failed() const;
    bool all_passed() const { return failed() == 0; }
};

struct SuiteOptions {
    int n_max = 12;
    /// Fan cases out over OpenMP threads; the report is identical either way.
    bool parallel = true;
};

/// Runs every identity family up to n_max. Never throws for a failing
/// identity: errors raised inside a case become counterexamples.
SuiteReport run_suite(const SuiteOptions& options);

}  // namespace uval
