#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tauroot::cli {

enum ExitCode : int { kOk = 0, kDomainError = 1, kUsageError = 2 };

/// Runs one command line (without the program name). Payload goes to `out`,
/// diagnostics to `err`. Files named "-" are read from `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace tauroot::cli
