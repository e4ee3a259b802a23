#pragma once

#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "signless/graph.hpp"

namespace signless {

inline constexpr int kMaxGraph6Order = 62;

class Graph6Error : public GraphError {
 public:
  using GraphError::GraphError;
};

// Short-form graph6 only (1 <= n <= 62). Header byte n+63, then the upper
// triangle x(0,1) x(0,2) x(1,2) x(0,3) ... packed six bits per byte, each
// byte offset by 63, zero padding in the final group.
auto from_graph6(std::string_view text) -> Graph;
auto to_graph6(const Graph &g) -> std::string;

/// Reads one graph per line, ignoring blank lines and a trailing '\r'.
auto read_graph6_stream(std::istream &in) -> std::vector<Graph>;

}  // namespace signless
