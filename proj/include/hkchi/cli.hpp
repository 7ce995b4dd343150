#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hkchi::cli {

enum ExitCode : int {
  kSuccess = 0,
  kInputError = 1,
  kIdentityFailure = 2,
  kInternalInconsistency = 3,
};

// Runs one invocation. `args` excludes the program name. Results go to
// `out`, diagnostics to `err`. `color` enables ANSI highlighting of
// PASS/FAIL markers in text output.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, bool color = false);

}  // namespace hkchi::cli
