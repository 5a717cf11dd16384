#pragma once

#include <string>
#include <vector>

namespace subcat::tools {

struct CommandResult
{
    std::string out;
    std::string err;
    int status = 0; ///< 0 success, 1 a checked property fails, 2 invalid input
};

/// Runs one command line (without the program name) and captures its report.
[[nodiscard]] auto run_cli(const std::vector<std::string> & args) -> CommandResult;

} // namespace subcat::tools
