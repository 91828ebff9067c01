#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace zimin::cli {

/// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kFailure = 1,  // internal error or a `repro` mismatch
  kUsage = 2,    // usage or validation error
  kCapExceeded = 3,
};

/// Runs the command line `args` (args[0] is the program name).
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace zimin::cli
