#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace eulersum::cli {

enum ExitCode : int {
    kOk = 0,
    kUsage = 1,
    kDivergent = 2,
    kNotReducible = 3,
    kVerifyFailed = 4,
};

/// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace eulersum::cli
