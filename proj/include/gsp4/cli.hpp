#pragma once

// Command-line front end: constants, verify, lattice, congruence (and eigensystem).

#include <ostream>

namespace gsp4 {

/// Exit statuses.
enum ExitStatus : int {
    kExitOk = 0,
    kExitCheckFailed = 1,
    kExitUsage = 2,
    kExitInput = 3,
};

/// Runs the tool with argv-style arguments, writing reports to `out` (or --out) and
/// diagnostics to `err`. Reads TOOLKIT_THREADS for the worker count.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace gsp4
