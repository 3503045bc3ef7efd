#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dce::cli {

enum ExitCode : int {
  kOk = 0,
  kValidationError = 1,
  kNumericError = 2,
  kPartialSweep = 3,
};

/// Runs the command line (args exclude the program name). Normal output goes
/// to `out` unless --out names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dce::cli
