#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace subperiod {

/// Runs the command-line driver on already-split arguments (excluding the
/// program name). Returns the process exit code: 0 on success, 1 for usage
/// or computation errors, 2 when a formula check finds a mismatch.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace subperiod
