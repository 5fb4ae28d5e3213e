#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace logderiv::cli {

/// Exit statuses shared by every command.
enum ExitCode : int {
  kPass = 0,
  kViolation = 1,  ///< a proven bound failed numerically
  kIoError = 2,
  kNumericsError = 3,
};

/// Runs the command line `args` (args[0] is the program name). Reports go to
/// `out` unless --out names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace logderiv::cli
