#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace conelab::cli {

enum ExitCode : int {
  kSuccess = 0,
  kInputError = 1,
  kSemanticFailure = 2,
  kInternalError = 3,
};

/// Runs one command line (args exclude the program name). JSON results go
/// to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace conelab::cli
