#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace rf::cli {

enum ExitCode : int {
  kOk = 0,
  kError = 1,
  kNotConverged = 2,
  kVerifyFailed = 3,
};

/// Runs the command line (args excludes the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rf::cli
