#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hmds::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kVerificationFailed = 2,
  kDecodeFailed = 3,
};

/// Runs one `hmds` invocation; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hmds::cli
