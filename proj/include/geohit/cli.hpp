#pragma once

#include <iosfwd>

namespace geohit {

/// Exit codes shared by every subcommand. `solve` uses all four; `verify`
/// returns Infeasible for a rejected solution.
enum ExitCode : int { kExitOk = 0, kExitInfeasible = 1, kExitError = 2, kExitTimeout = 3 };

/// Entry point of the geohit command line tool; argv[0] is the program name.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace geohit
