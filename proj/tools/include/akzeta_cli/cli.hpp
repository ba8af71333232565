#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace akzeta::cli {

/// Exit codes: 0 success, 1 verification failure, 2 usage or domain error.
enum ExitCode : int { kOk = 0, kVerifyFailed = 1, kUsage = 2 };

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Convenience form; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace akzeta::cli
