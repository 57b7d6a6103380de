#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace crossbessel::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kDomain = 2,
  kNonConvergence = 3,
  kVerificationFailed = 4,
};

// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace crossbessel::cli
