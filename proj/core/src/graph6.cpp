#include "signless/graph6.hpp"

#include <string>

namespace signless {

namespace {

constexpr int kBias = 63;

auto body_length(int n) -> std::size_t {
  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  return (bits + 5) / 6;
}

}  // namespace

auto from_graph6(std::string_view text) -> Graph {
  if (text.starts_with(">>graph6<<"))
    text.remove_prefix(10);
  if (text.empty())
    throw Graph6Error("graph6: empty input");

  const int header = static_cast<unsigned char>(text[0]);
  if (header == 126)
    throw Graph6Error("graph6: long-form header (n > 62) is not supported");
  if (header < kBias || header > kBias + kMaxGraph6Order)
    throw Graph6Error("graph6: malformed header byte");
  const int n = header - kBias;
  if (n < 1)
    throw Graph6Error("graph6: vertex count must be at least 1");

  const std::string_view body = text.substr(1);
  if (body.size() != body_length(n))
    throw Graph6Error("graph6: expected " + std::to_string(body_length(n)) +
                      " body bytes for n=" + std::to_string(n) + ", got " +
                      std::to_string(body.size()));

  Graph g(n);
  std::size_t bit = 0;
  const std::size_t total = static_cast<std::size_t>(n) * (n - 1) / 2;
  int i = 0;
  int j = 1;
  for (const char ch : body) {
    const int value = static_cast<unsigned char>(ch) - kBias;
    if (value < 0 || value > 63)
      throw Graph6Error("graph6: body byte outside '?'..'~'");
    for (int k = 5; k >= 0; --k, ++bit) {
      const bool set = (value >> k) & 1;
      if (bit >= total) {
        if (set)
          throw Graph6Error("graph6: nonzero padding bits");
        continue;
      }
      if (set)
        g.add_edge(i, j);
      if (++i == j) {
        i = 0;
        ++j;
      }
    }
  }
  return g;
}

auto to_graph6(const Graph &g) -> std::string {
  const int n = g.order();
  if (n < 1 || n > kMaxGraph6Order)
    throw Graph6Error("graph6: short form supports 1..62 vertices, got " + std::to_string(n));

  std::string out;
  out.reserve(1 + body_length(n));
  out.push_back(static_cast<char>(n + kBias));
  int value = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      value = (value << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(value + kBias));
        value = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0)
    out.push_back(static_cast<char>((value << (6 - filled)) + kBias));
  return out;
}

auto read_graph6_stream(std::istream &in) -> std::vector<Graph> {
  std::vector<Graph> graphs;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r')
      line.pop_back();
    if (line.empty())
      continue;
    graphs.push_back(from_graph6(line));
  }
  return graphs;
}

}  // namespace signless
