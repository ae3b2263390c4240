#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace phinewton {

/// Exit codes of the command-line front end.
enum ExitCode : int {
  kExitIrreducible = 0,
  kExitOk = 0,
  kExitUsage = 1,
  kExitHypothesesNotMet = 2,
  kExitRemarkOpen = 3,
  kExitNoResult = 4,  // no Hanson witness, or oracle search refused
};

/// Runs the CLI on `args` (args[0] is the program name), writing results to
/// `out` and diagnostics to `err`. Returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace phinewton
