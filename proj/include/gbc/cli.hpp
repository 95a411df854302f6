#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gbc::cli {

enum ExitCode : int {
  kSuccess = 0,
  kUsageError = 1,
  kPreconditionViolation = 2,
  kConsistencyFailure = 3,
};

/// Runs the `gbc` command line; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gbc::cli
