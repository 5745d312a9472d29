#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace divconv::cli {

enum ExitCode {
  kOk = 0,
  kVerifyFailed = 1,
  kUsage = 2,
  kUnsupportedLevel = 3,
  kInternal = 4,
};

/// Runs one command line (args[0] is the program name) and returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace divconv::cli
