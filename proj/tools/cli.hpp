#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace lpalg::cli {

// Exit codes: 0 success or clean report, 1 mathematical rejection (invalid
// seed, non-member, probe violation), 2 usage or input error, 3 internal error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lpalg::cli
