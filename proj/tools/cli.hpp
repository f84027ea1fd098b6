#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace chernsign::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int { kOk = 0, kFailed = 1, kUsage = 2 };

/// Runs the command line `args` (without the program name), writing results
/// to `out` and diagnostics to `err`. The config file named by the
/// CHERNSIGN_CONFIG environment variable, if set, is read first.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace chernsign::cli
