#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nfactor {

// Runs the command-line surface. `args` excludes the program name.
// Exit codes: 0 success, 1 domain or usage error, 2 verification mismatch.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nfactor
