#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hllab::cli {

/// Exit codes of the hllab tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;         // bad flags, bad config, domain/regime errors
inline constexpr int kExitInconclusive = 2;  // --strict and some verdict is Inconclusive

/// Runs the tool on argv-style arguments (args[0] is the program name).
/// Normal output goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hllab::cli
