#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ordual::cli {

/// Runs the command line `args` (without the program name). Payload goes to
/// `out`, diagnostics to `err`. Returns the process exit code: 0 on success
/// or a passing verification, 1 on a counterexample, 2 on input or
/// precondition errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ordual::cli
