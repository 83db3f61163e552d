#pragma once

#include <iosfwd>

namespace ehvi::workbench {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitVerifyFailed = 2;
inline constexpr int kExitNoConvergence = 3;

/// Entry point of the `ehvi` tool with subcommands compute, verify, bench and
/// gen. Writes reports to `out` and diagnostics to `err`; returns the exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ehvi::workbench
