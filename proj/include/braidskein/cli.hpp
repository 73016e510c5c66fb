#pragma once

#include <ostream>

namespace braidskein {

/// Exit statuses of the command-line tool.
enum ExitCode : int { kExitOk = 0, kExitVerdictFailure = 1, kExitUsage = 2 };

/// Runs one command. Results go to `out`, diagnostics to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace braidskein
