#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace graphck {

/// Runs the command line `args` (without the program name). Returns 0 on
/// success, 1 for invalid input or a rejected move, 2 when an invariant
/// check fails.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace graphck
