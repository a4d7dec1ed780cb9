#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace gsv::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,   // config, unknown command, bad flags
  kDomain = 2,  // syntax and domain errors in the inputs
  kCheckFailed = 3,
};

/// Runs one invocation; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gsv::cli
