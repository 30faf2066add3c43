#pragma once

#include <iosfwd>

namespace lvl2 {

// Exit codes of the command-line front end.
enum ExitCode : int {
  kExitOk = 0,
  kExitVerificationFailed = 1,
  kExitUnsupported = 2,
  kExitBudgetExceeded = 3,
  kExitUsage = 64,
};

// Runs `lvl2net <command> ...` with argv[0] the program name. Output goes to
// `out`, diagnostics to `err`. The thread count for enumeration is read from
// the LVL2_THREADS environment variable (default 1).
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace lvl2
