#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sodlab {

// Runs the command line tool on argv-style arguments (program name excluded).
// Exit codes: 0 success, 1 invalid input or usage, 2 capacity exceeded,
// 3 internal consistency failure.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace sodlab
