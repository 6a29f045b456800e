#pragma once

// Command-line front end. Exit codes: 0 ok, 2 input error, 3 engine disagreement or a
// failed verification.

#include <iosfwd>
#include <string>
#include <vector>

namespace hfsurg {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 2;
inline constexpr int kExitMismatch = 3;

// args[0] is the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// "A..B" (inclusive, 0 skipped) or a single integer.
std::vector<int> parse_slope_range(const std::string& text);

}  // namespace hfsurg
