#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wtss {

/// Exit codes of the command-line tool.
enum ExitCode : int {
    exit_ok = 0,
    exit_usage = 1,
    exit_invalid_input = 2,
    exit_precondition = 3,
    exit_oracle_limit = 4,
    exit_check_failed = 5,
};

/// Runs the tool on `args` (without the program name). Reports go to `out`,
/// diagnostics to `err`. Input path "-" reads standard input.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wtss
