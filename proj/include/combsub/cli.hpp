#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace combsub {

inline constexpr int exit_ok = 0;
inline constexpr int exit_failure = 1;
inline constexpr int exit_usage = 2;
inline constexpr int exit_parse = 3;
inline constexpr int exit_domain = 4;

/// Runs one command; `args` excludes the program name. Diagnostics go to `err` as one line.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace combsub
