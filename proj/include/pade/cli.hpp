#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pade {

/// Exit codes of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitInputError = 2;

/// Runs one invocation of the `pade` tool. `args` excludes the program name.
/// Documents go to `out` (or --output), diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pade
