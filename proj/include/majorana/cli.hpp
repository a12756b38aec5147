#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace majorana::cli {

/// Exit statuses.
inline constexpr int kOk = 0;
inline constexpr int kFailure = 1;
inline constexpr int kInequivalent = 2;

/// Runs one command line (without the program name). Documents go to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace majorana::cli
