#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hlvir::cli {

enum ExitCode : int {
  kOk = 0,
  kNotEqual = 1,
  kUsage = 2,
  kSingular = 3,
  kDegeneratePairing = 4,
  kAdjointUndefined = 5,
  kMathError = 6,
};

/// Runs one command line (args[0] is the program name). Normal output goes to
/// `out`, diagnostics to `err`; the return value is the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hlvir::cli
