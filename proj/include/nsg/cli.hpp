#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nsg::cli {

enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kUsageError = 2,
  kBudgetExceeded = 3,
  kCacheCorrupt = 4,
};

/// Runs one command line (args exclude the program name) and returns the
/// process exit status. All output goes to `out` / `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nsg::cli
