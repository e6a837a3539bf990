#pragma once

// Command-line front end.  run_cli is the whole program minus process
// plumbing, so it can be driven in-process.
//
// Exit codes: 0 ok, 1 violation, 2 inconclusive, 3 input error.

#include <ostream>
#include <string>
#include <vector>

namespace hrg {

enum ExitCode : int { exit_ok = 0, exit_violation = 1, exit_inconclusive = 2, exit_input = 3 };

// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hrg
