#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tpg::cli {

inline constexpr int kOk = 0;
inline constexpr int kDiscrepancy = 1;
inline constexpr int kUsage = 2;

/// Runs one command line (args excludes the program name). Results go to
/// out, diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tpg::cli
