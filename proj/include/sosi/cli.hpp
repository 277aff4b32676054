#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace sosi {

// Exit codes: 0 success, 1 bad input, 2 failed self-check, 3 oracle disagreement.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sosi
