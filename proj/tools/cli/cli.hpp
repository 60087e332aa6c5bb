#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace jacobsthal::cli
{

    enum ExitCode : int
    {
        kSuccess = 0,
        kMismatch = 1,
        kUsage = 2,
    };

    /// Runs one invocation. `args` excludes the program name.
    int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace jacobsthal::cli
