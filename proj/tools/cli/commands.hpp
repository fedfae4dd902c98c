#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace frieze::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainFalse = 1;
inline constexpr int kExitUsage = 2;

// Runs one command. `args` excludes the program name. Data goes to `out`,
// diagnostics and progress to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace frieze::cli
