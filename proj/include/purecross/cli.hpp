#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace purecross::cli {

enum ExitCode : int { Ok = 0, VerificationFailed = 1, UsageError = 2 };

/// Runs one command line (program name excluded). Output goes to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace purecross::cli
