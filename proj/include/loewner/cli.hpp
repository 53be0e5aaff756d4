#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace loewner::cli {

/// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitHypothesis = 2;
inline constexpr int kExitUsage = 3;
inline constexpr int kExitNumerical = 4;

/// Runs one CLI invocation (argv without the program name) against the
/// given streams and returns the exit code. The binary entry point is a
/// thin wrapper over this so tests can drive the full surface in-process.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace loewner::cli
