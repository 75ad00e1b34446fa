#pragma once

#include <ostream>

namespace idealkit {

/// Exit codes of the command-line driver.
enum ExitCode : int {
  kExitOk = 0,
  kExitRefuted = 1,
  kExitUsage = 2,
  kExitResource = 3,
};

/// Runs the driver with results on `out` and diagnostics on `err`.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace idealkit
