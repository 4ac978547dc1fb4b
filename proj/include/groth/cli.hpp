#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace groth::cli {

/// Exit codes: 0 pass, 1 identity failure, 2 usage/validation, 3 computational error.
enum ExitCode : int { kPass = 0, kIdentityFailure = 1, kValidation = 2, kComputation = 3 };

/// Runs the command line `args` (program name excluded).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace groth::cli
