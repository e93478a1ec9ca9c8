#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace implcount::cli {

enum ExitCode : int {
  kSuccess = 0,
  kCounterexample = 1,
  kUsageError = 2,
  kResourceError = 3,
};

/// Runs the command line `args` (args[0] is the program name), writing
/// results to `out` and diagnostics to `err`. Returns the process exit code.
///
/// Subcommands: series, table, verify, monoid, colors. See --help.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace implcount::cli
