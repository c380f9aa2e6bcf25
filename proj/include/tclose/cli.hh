#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tclose
{
    /// Process exit codes of the command-line tool.
    enum ExitCode : int
    {
        exit_ok = 0,
        exit_usage = 1,
        exit_parse = 2,
        exit_precondition = 3,
        exit_size_guard = 4
    };

    /**
     * Run one subcommand. `args` excludes the program name. Data goes to
     * `out`, diagnostics to `err`; "-" or an omitted input file reads `in`.
     */
    auto run_cli(const std::vector<std::string> & args, std::istream & in, std::ostream & out, std::ostream & err)
        -> int;
}
