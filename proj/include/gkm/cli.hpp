#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace gkm {

// Exit codes: 0 all checks pass, 1 a check failed, 2 usage or input error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace gkm
