#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace polyrel::cli {

enum ExitCode : int {
  kOk = 0,
  kPredicateFalse = 1,
  kBadInput = 2,
  kPrecondition = 3,
  kInternal = 4,
};

/// Runs the command line `args` (without the program name). Results go to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace polyrel::cli
