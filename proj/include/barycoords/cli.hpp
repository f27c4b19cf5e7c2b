#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace barycoords::cli {

enum ExitCode : int {
  kOk = 0,
  kInvalidInput = 2,
  kOutside = 3,
  kNoConvergence = 4,
};

/// Runs the command line `args` (without the program name), writing results to
/// `out` and diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace barycoords::cli
