#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace stablecoh {

// Entry point behind the `stablecoh` binary; `args` excludes the program
// name.  Renders to `out`, diagnostics to `err`.  Exit codes: 0 success,
// 1 a verification check failed, 2 usage error or unsupported parameters.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace stablecoh
