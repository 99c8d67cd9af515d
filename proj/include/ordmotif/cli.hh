#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ordmotif
{
    /// Runs the command line tool on `args` (without the program name).
    /// Returns 0 on success, 1 for a negative verdict or an empty search
    /// result, 2 for usage and input errors.
    auto cli_main(const std::vector<std::string> & args, std::ostream & out, std::ostream & err) -> int;
}
