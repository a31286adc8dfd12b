#ifndef RPDEP_TOOLS_CLI_HPP_
#define RPDEP_TOOLS_CLI_HPP_

#include <iosfwd>

namespace rpdep::cli {

/// Exit codes of the command-line tool.
enum ExitCode : int
{
    kOk = 0,
    kNegative = 1, ///< "independent" from query, a failed check
    kParseError = 2,
    kUsageError = 3,
    kBudgetExceeded = 4,
};

/// Runs the tool on argv, writing results to `out` and diagnostics to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace rpdep::cli

#endif
