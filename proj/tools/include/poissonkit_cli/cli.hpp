#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace poissonkit::cli {

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kParseError = 2;
inline constexpr int kPreconditionFailed = 3;
inline constexpr int kInvariantBreach = 4;

/// Runs one command; `args` excludes the program name. Reports go to `out`,
/// diagnostics to `err`.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace poissonkit::cli
