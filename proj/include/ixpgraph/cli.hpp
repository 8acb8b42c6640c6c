#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ixpgraph {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitUsageError = 2;

// Entry point of the `ixpgraph` tool. `args` excludes the program name.
// Reports go to `out`, diagnostics and usage text to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ixpgraph
