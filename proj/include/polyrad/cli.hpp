#pragma once

#include <iosfwd>

namespace polyrad {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitCaseFailed = 1,
  kExitInput = 2,
  kExitComputation = 3,
  kExitPrecondition = 4,
};

/// Runs the polyrad command line; reports go to `out` (or --output), errors
/// to `err`.
int run_cli(int argc, const char *const *argv, std::ostream &out,
            std::ostream &err);

} // namespace polyrad
