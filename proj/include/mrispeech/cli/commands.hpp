#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mrispeech::cli {

enum ExitCode : int { kSuccess = 0, kFailure = 1, kUsage = 2 };

/// Parses the command line and runs one subcommand. Library errors map to
/// kFailure, bad flags and configuration files to kUsage.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Same, with args[0] as the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mrispeech::cli
