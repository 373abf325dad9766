#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace signrank::cli {

enum ExitCode : int {
  kSuccess = 0,
  kInternalError = 1,
  kInputError = 2,
  kSizeLimit = 3,
  kNotConverged = 4,
};

/// Runs the command line `args` (without the program name). Results go to
/// `out` unless --out is given, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace signrank::cli
