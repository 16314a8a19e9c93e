#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace springer::cli {

enum ExitCode : int { kOk = 0, kMismatch = 1, kUsage = 2 };

/// Runs one command. `args` excludes the program name. Data goes to `out`,
/// diagnostics and usage help to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace springer::cli
