#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace crystal {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitPass = 0,
  kExitFail = 1,
  kExitInput = 2,
  kExitBudget = 3,
};

/// Runs the command-line tool. args excludes the program name. Files named
/// "-" are written to `out`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace crystal
