#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace toric::cli {

/// Run the command line front end on the given arguments (program name
/// excluded). Returns the process exit code: 0 on success, 1 on input or
/// validation errors, 2 on internal invariant violations.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace toric::cli
