#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dyckstat {

/// Exit codes of the command-line front end.
enum ExitCode : int { kExitOk = 0, kExitUsage = 1, kExitVerifyFailed = 2, kExitInternal = 3 };

/// Runs one invocation. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dyckstat
