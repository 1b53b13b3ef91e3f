#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sk::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitData = 2;

/// Parses `args` (without the program name) and runs the subcommand.
/// Returns 0 on success, 1 on usage errors, 2 on data or numeric errors.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace sk::cli
