// Command-line front end.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fglwb {

enum ExitCode : int { kExitOk = 0, kExitVerifyFailed = 1, kExitUsage = 2, kExitIo = 3 };

/// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fglwb
