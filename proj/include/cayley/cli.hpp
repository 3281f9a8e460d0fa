#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cayley {

// Runs one command line (without the program name). Returns 0 on success, 1
// for a failed library operation and 2 for malformed input or usage.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cayley
