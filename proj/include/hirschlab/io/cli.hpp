#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hirschlab::io {

enum ExitCode : int {
  kExitOk = 0,
  kExitInputError = 1,
  kExitCapExceeded = 2,
  kExitInternalError = 3,
};

/// Runs one CLI invocation. `args` excludes the program name. The report is
/// written to `out` in a single write; diagnostics go to `err`.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hirschlab::io
