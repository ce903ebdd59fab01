#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tangle::cli {

enum ExitCode : int { kOk = 0, kRejected = 1, kUsage = 2 };

/// Runs the `tangle` command line. `args` excludes the program name. Results go
/// to `out` unless a subcommand writes to --output; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tangle::cli
