#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace copermanent::cli {

enum ExitCode : int {
  kSuccess = 0,
  kUsageError = 1,
  kDataError = 2,
  kCapacityError = 3,
};

/// Runs the command line `args` (without the program name). Results go to
/// `out`, progress and errors to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace copermanent::cli
