#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace g2skein::cli {

inline constexpr int exit_pass = 0;
inline constexpr int exit_fail = 1;
inline constexpr int exit_error = 2;
inline constexpr int exit_usage = 64;

/// Runs the command line `args` (args[0] is the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace g2skein::cli
