#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace lagplace::cli {

enum ExitCode : int {
  kExitSuccess = 0,
  kExitInternal = 1,
  kExitInput = 2,
  kExitNoSolution = 3,
  kExitUnreliable = 4,
};

/// Runs one command line (without the program name). The JSON document
/// goes to --out or `out`; diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lagplace::cli
