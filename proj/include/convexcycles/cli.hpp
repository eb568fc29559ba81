#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace convexcycles::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitConsistency = 3;

// Runs the command line (args excludes the program name). "-" as a file
// argument reads from `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace convexcycles::cli
