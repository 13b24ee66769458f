#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace osculate {

/// Exit codes of the command-line front end.
enum ExitCode : int { kExitOk = 0, kExitInvalid = 1, kExitVerifyFailed = 2 };

/// Entry point of the `osculate` tool. Subcommands: frenet, mesh, curvature,
/// classify, verify. Output goes to --out when given, otherwise to `out`;
/// diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace osculate
