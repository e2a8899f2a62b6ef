#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace binassoc::cli {

/// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitInconsistent = 2;

/// Runs one command line (args excludes the program name) and returns the
/// exit code. Subcommands: analyze, verify, family, simulate.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace binassoc::cli
