#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qcw::cli {

enum ExitCode : int {
  kSuccess = 0,
  kVerificationFailed = 1,
  kUsageError = 2,
};

/// Runs one command line (without the program name). Output is
/// deterministic for identical arguments.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qcw::cli
