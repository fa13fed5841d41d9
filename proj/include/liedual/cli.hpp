#pragma once

#include <iosfwd>

namespace liedual {

/// Exit codes of the command line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitCheckFailed = 1,
  kExitInputError = 2,
  kExitNegativeMultiplicity = 3,
  kExitBudgetExceeded = 4,
};

/// Parses argv, runs one subcommand and writes its report to `out`
/// (diagnostics to `err`). Returns one of the ExitCode values.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace liedual
