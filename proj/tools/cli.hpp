#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace signless::cli {

enum ExitCode : int {
  kOk = 0,
  kViolations = 1,
  kUsage = 2,
};

struct Streams {
  std::istream &in;
  std::ostream &out;
  std::ostream &err;
};

/// Runs the command line `args` (without the program name).
auto run(const std::vector<std::string> &args, Streams io) -> int;

/// "A..B" or "A"; throws std::invalid_argument on anything else.
auto parse_range(const std::string &text) -> std::pair<int, int>;

}  // namespace signless::cli
