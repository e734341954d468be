#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tdcodes::cli {

/// Exit codes of tdcodes.
enum ExitCode : int { kOk = 0, kClaimFailed = 1, kUsage = 2, kInternal = 3 };

/// Runs tdcodes with `args` (program name excluded). Reports go to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tdcodes::cli
