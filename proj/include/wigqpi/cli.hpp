#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wigqpi::cli {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kOk = 0,
  kFailure = 1,
  kUsage = 2,
  kToleranceNotReached = 3,
  kConventionUnresolved = 4,
};

/// Runs one CLI invocation. `args` excludes the program name. Output goes to
/// `out`, diagnostics to `err`; returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// FNV-1a 64 of a string, 16 lowercase hex digits.
std::string fnv1a_hex(const std::string& text);

/// Writes the golden fixture set into `dir` after re-checking the closed-form
/// and scaling oracles; returns false (writing nothing) if any check fails.
bool regenerate_fixtures(const std::string& dir, std::ostream& log);

}  // namespace wigqpi::cli
