#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace folklab::cli
{
    enum ExitCode : int
    {
        exit_ok = 0,
        exit_usage = 2,
        exit_mismatch = 3,
        exit_budget = 4,
        exit_validation = 5
    };

    /// Runs one command line (args[0] is the program name) writing results to out and
    /// one-line diagnostics to err. Returns the process exit code.
    auto run(const std::vector<std::string> & args, std::ostream & out, std::ostream & err) -> int;
}
