#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace prodham {

/// Exit codes of the command-line tool.
enum ExitCode : int {
    kExitOk = 0,
    kExitUsage = 1,
    kExitParse = 2,
    kExitPrecondition = 3,
    kExitNoFactor = 4,
    kExitBudget = 5,
};

/// Runs the tool on `args` (args[0] is the program name). Human-readable
/// text and JSON payloads go to `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace prodham
