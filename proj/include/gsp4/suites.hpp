#pragma once

// Named invariant suites run by `verify` and by the acceptance binary.

#include <cstddef>
#include <string>
#include <vector>

namespace gsp4 {

struct CheckResult {
    std::string name;
    std::size_t passed = 0;
    std::size_t total = 0;
    std::string detail;  // first failure, if any

    bool ok() const { return total > 0 && passed == total; }
};

struct SuiteResult {
    std::string suite;
    std::vector<CheckResult> checks;

    bool ok() const;
};

/// Suite names in run order: lie, ktypes, constants, lattice, modforms.
const std::vector<std::string>& suite_names();

/// Runs one suite. Throws std::invalid_argument for an unknown name.
SuiteResult run_suite(const std::string& name);

/// Runs the named suites on up to `threads` workers; results keep the input order.
std::vector<SuiteResult> run_suites(const std::vector<std::string>& names, std::size_t threads);

}  // namespace gsp4
