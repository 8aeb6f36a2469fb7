#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cubuland {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
  kExitOk = 0,        // success, or the decided property holds
  kExitNegative = 1,  // the decided property fails (e.g. not chargeless)
  kExitInvalid = 2,   // invalid input, parse errors, unsupported configurations
  kExitBudget = 3,    // a search or enumeration budget ran out
};

/// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cubuland
