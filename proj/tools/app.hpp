#pragma once

#include <ostream>

namespace weberosc::cli {

/// Exit codes of the weberosc binary.
enum ExitCode : int {
  kOk = 0,
  kConfigError = 2,
  kNumericError = 3,
  kRootNotFound = 4,
};

/// Entry point of `weberosc transient|forced|polar|zeros`; summaries go to
/// out, diagnostics to err.
int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err);

}  // namespace weberosc::cli
