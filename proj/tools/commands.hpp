#ifndef L2A_TOOLS_COMMANDS_HPP
#define L2A_TOOLS_COMMANDS_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace l2a::cli {

enum ExitCode : int { kSuccess = 0, kFailure = 1, kInputError = 2 };

/// Runs the command line `args` (without the program name), writing results
/// to `out` and diagnostics to `err`. Returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace l2a::cli

#endif  // L2A_TOOLS_COMMANDS_HPP
