#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace spp::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int { kSuccess = 0, kNotFound = 1, kUsage = 2 };

/// Parses argv (argv[0] is the program name) and dispatches to a
/// subcommand. Results go to `out` unless --output names a file;
/// diagnostics go to `err` only.
int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);

}  // namespace spp::cli
