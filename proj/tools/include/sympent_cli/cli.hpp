#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sympent {

// Runs the command-line driver. `args` excludes the program name.
// Returns the process exit code: 0 on success, 2 on input errors
// (parse failures, bad flags), 3 on mathematical inconsistency
// (rank-stable route disagreement).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sympent
