#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace nazeta {

enum ExitCode : int { kExitPass = 0, kExitVerification = 1, kExitInput = 2, kExitGate = 3 };

// Runs one command line (args excludes the program name). Results go to out as
// JSON; the verify table and diagnostics go to err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nazeta
