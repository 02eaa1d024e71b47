#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mpg::cli {

enum ExitCode : int { kOk = 0, kVerdictFail = 1, kUsage = 2 };

/// Runs the command line `args` (args[0] is the program name). `in` backs the
/// "-" file argument. Returns the process exit code.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace mpg::cli
