#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace perfloc::cli {

/// Exit codes of the command-line tool.
enum ExitCode : int { kOk = 0, kPropertyViolated = 1, kUsage = 2 };

/// Runs one command. `args` excludes the program name. The report goes to
/// `out` (or to --output), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace perfloc::cli
