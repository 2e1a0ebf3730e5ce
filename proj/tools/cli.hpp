#ifndef WPVOL_TOOLS_CLI_HPP
#define WPVOL_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace wpvol::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInternal = 3;

/// Runs the command line with structured output on `out` and diagnostics on
/// `err`. args[0] is the program name. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wpvol::cli

#endif  // WPVOL_TOOLS_CLI_HPP
