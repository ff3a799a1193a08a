#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hyperfan::cli {

enum ExitCode
{
    ok = 0,
    usage_error = 1,
    mismatch = 2,
    cap_exceeded = 3,
};

/// Runs the command line `args` (without the program name). JSON results go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hyperfan::cli
