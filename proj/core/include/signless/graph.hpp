#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace signless {

inline constexpr int kMaxVertices = 64;

/// One adjacency row: bit j set iff the vertex is adjacent to j.
using Row = std::uint64_t;

class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/**
 * Simple undirected graph on at most 64 vertices, stored as one adjacency
 * bitset per vertex.
 *
 * Rows are kept symmetric, loop-free, and clear above bit n-1. Equality is
 * labeled equality; isomorphism lives in canonical.hpp.
 */
class Graph {
 public:
  Graph() = default;

  /// Edgeless graph on n vertices, 1 <= n <= 64.
  explicit Graph(int n);

  /// Builds from adjacency rows; throws unless they satisfy the invariants.
  static auto from_rows(std::span<const Row> rows) -> Graph;

  auto order() const -> int { return n_; }

  auto adjacent(int u, int v) const -> bool { return (adj_[u] >> v) & 1U; }

  auto neighbours(int v) const -> Row { return adj_[v]; }

  auto degree(int v) const -> int { return std::popcount(adj_[v]); }

  auto rows() const -> std::span<const Row> { return {adj_.data(), static_cast<std::size_t>(n_)}; }

  /// Mask with the low n bits set.
  auto vertex_mask() const -> Row { return n_ == 64 ? ~Row{0} : (Row{1} << n_) - 1; }

  auto add_edge(int u, int v) -> void;
  auto remove_edge(int u, int v) -> void;

  auto edge_count() const -> int;

  auto operator==(const Graph &) const -> bool = default;

 private:
  auto check_pair(int u, int v) const -> void;

  int n_ = 0;
  std::array<Row, kMaxVertices> adj_{};
};

struct DegreeProfile {
  std::vector<int> degrees;
  int full = 0;         // vertices of degree n-1
  int near_full = 0;    // vertices of degree n-2
  int min_degree = 0;
  int max_degree = 0;
};

auto count_edges(const Graph &g) -> int;
auto degree_profile(const Graph &g) -> DegreeProfile;
auto complement(const Graph &g) -> Graph;
auto is_connected(const Graph &g) -> bool;

/// Relabels so that vertex v of g becomes perm[v] in the result.
auto relabel(const Graph &g, std::span<const int> perm) -> Graph;

/// Removes vertex v and shifts higher labels down by one.
auto delete_vertex(const Graph &g, int v) -> Graph;

auto make_complete(int n) -> Graph;
auto make_complete_minus_edge(int n) -> Graph;
auto make_cycle(int n) -> Graph;
auto make_path(int n) -> Graph;
auto make_star(int leaves) -> Graph;

/**
 * The graph whose complement is K_{1,n-3} + K_2.
 *
 * Vertex 0 is the star centre, vertices 1 and 2 form the K_2 pair, and
 * vertices 3..n-1 are the star leaves. Requires n >= 5.
 */
auto make_star_k2_complement(int n) -> Graph;

}  // namespace signless
