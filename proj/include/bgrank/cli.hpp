#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace bgrank::cli {

enum ExitCode : int {
  kPass = 0,
  kMismatch = 1,
  kUsage = 2,
  kDomain = 3,
};

int run(int argc, char** argv, std::ostream& out, std::ostream& err);

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// "3", "0..5", "-6..7", "0,1". Throws Error(Parse).
std::vector<int> parse_range(const std::string& text);

}  // namespace bgrank::cli
