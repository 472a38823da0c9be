#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pmcf::app {

/// Exit codes of the command line tool.
enum ExitCode : int { kExitOk = 0, kExitError = 1, kExitTruncated = 2 };

/// Runs the tool on `args` (program name excluded).
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace pmcf::app
