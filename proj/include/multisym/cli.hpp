#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace multisym::cli {

/// Exit codes: 0 success, 1 verification failure, 2 usage error.
enum ExitCode : int { kOk = 0, kFail = 1, kUsage = 2 };

/// Runs the command line `args` (without the program name). Reports go to
/// `out` (or to --out), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace multisym::cli
