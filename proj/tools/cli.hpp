#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hyfac::cli {

enum ExitCode : int {
  kOk = 0,
  kAuditFailed = 1,
  kBadInput = 2,
  kInternalDefect = 3,
};

/// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace hyfac::cli
