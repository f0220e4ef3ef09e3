#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gwe::cli {

// exit codes: 0 all checks pass, 1 assertion failure, 2 configuration error,
// 3 numerical accuracy failure
inline constexpr int exit_ok = 0;
inline constexpr int exit_assertion = 1;
inline constexpr int exit_config = 2;
inline constexpr int exit_accuracy = 3;

// Full command-line entry point, usable in-process by tests. args excludes
// the program name. Output goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gwe::cli
