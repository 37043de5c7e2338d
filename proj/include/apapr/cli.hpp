#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace apapr {

/// Exit codes: 0 no failed checks, 1 model error or failed check, 2 bad flags.
enum ExitCode : int { kExitOk = 0, kExitFailure = 1, kExitUsage = 2 };

/// Runs the command line (args excludes the program name) and writes the
/// report to `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace apapr
