#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace kbd {

enum ExitCode : int { kExitOk = 0, kExitSemantic = 1, kExitUsage = 2 };

// Runs one `kbd` subcommand. args excludes the program name.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kbd
