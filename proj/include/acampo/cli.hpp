#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace acampo {

// Exit codes: 0 success, 1 validation failure, 2 input/parse error, 3 budget error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace acampo
