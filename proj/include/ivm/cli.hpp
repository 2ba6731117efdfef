#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ivm {

// Runs one `ivm` command. `args` excludes the program name. Exit codes:
// 0 feasible/valid/done, 1 infeasible/invalid, 2 parse or usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ivm
