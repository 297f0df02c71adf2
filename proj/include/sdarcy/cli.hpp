#pragma once

#include <ostream>

namespace sdarcy {

enum ExitCode : int { kExitOk = 0, kExitConfig = 1, kExitSolver = 2, kExitIo = 3 };

/// Entry point of the command-line tool. Subcommands: convergence, run, ritz.
/// Every failure writes one `error: ...` line to `err` and returns a nonzero
/// ExitCode.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace sdarcy
