#pragma once

#include <ostream>

namespace oscount::cli {

enum ExitCode : int {
    exit_ok = 0,
    exit_argument = 1,
    exit_budget = 2,
    exit_verify_failed = 3,
};

// Entry point of the `oscount` tool. Subcommands: compute, table,
// breakdown, gw, verify.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace oscount::cli
