#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mixcage::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kUsage = 1;
inline constexpr int kParseError = 2;  // unreadable file, malformed input
inline constexpr int kMismatch = 3;    // verify --expect failed
inline constexpr int kTruncated = 4;   // search hit its node budget
inline constexpr int kNoCycle = 5;     // orient found no Hamiltonian cycle

/// Runs the command line `args` (without the program name). Machine-readable
/// output goes to `out`, diagnostics to `err`; "-" as an input file reads `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace mixcage::cli
