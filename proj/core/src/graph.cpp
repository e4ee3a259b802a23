#include "signless/graph.hpp"

#include <algorithm>
#include <string>

namespace signless {

Graph::Graph(int n) : n_(n) {
  if (n < 1 || n > kMaxVertices)
    throw GraphError("vertex count " + std::to_string(n) + " outside 1..64");
}

auto Graph::from_rows(std::span<const Row> rows) -> Graph {
  Graph g(static_cast<int>(rows.size()));
  const Row all = g.vertex_mask();
  for (int v = 0; v < g.n_; ++v) {
    Row row = rows[v];
    if (row & ~all)
      throw GraphError("adjacency row has bits beyond the vertex count");
    if ((row >> v) & 1U)
      throw GraphError("self-loops are not allowed");
    g.adj_[v] = row;
  }
  for (int v = 0; v < g.n_; ++v)
    for (Row row = g.adj_[v]; row; row &= row - 1)
      if (!g.adjacent(std::countr_zero(row), v))
        throw GraphError("adjacency rows are not symmetric");
  return g;
}

auto Graph::check_pair(int u, int v) const -> void {
  if (u < 0 || v < 0 || u >= n_ || v >= n_)
    throw GraphError("vertex index out of range");
  if (u == v)
    throw GraphError("self-loops are not allowed");
}

auto Graph::add_edge(int u, int v) -> void {
  check_pair(u, v);
  adj_[u] |= Row{1} << v;
  adj_[v] |= Row{1} << u;
}

auto Graph::remove_edge(int u, int v) -> void {
  check_pair(u, v);
  adj_[u] &= ~(Row{1} << v);
  adj_[v] &= ~(Row{1} << u);
}

auto Graph::edge_count() const -> int {
  int twice = 0;
  for (int v = 0; v < n_; ++v)
    twice += std::popcount(adj_[v]);
  return twice / 2;
}

auto count_edges(const Graph &g) -> int { return g.edge_count(); }

auto degree_profile(const Graph &g) -> DegreeProfile {
  const int n = g.order();
  DegreeProfile p;
  p.degrees.resize(n);
  for (int v = 0; v < n; ++v) {
    const int d = g.degree(v);
    p.degrees[v] = d;
    if (d == n - 1)
      ++p.full;
    if (d == n - 2)
      ++p.near_full;
  }
  const auto [lo, hi] = std::minmax_element(p.degrees.begin(), p.degrees.end());
  p.min_degree = *lo;
  p.max_degree = *hi;
  return p;
}

auto complement(const Graph &g) -> Graph {
  const int n = g.order();
  Graph c(n);
  const Row all = g.vertex_mask();
  for (int u = 0; u < n; ++u) {
    Row row = all & ~g.neighbours(u) & ~(Row{1} << u);
    while (row) {
      const int v = std::countr_zero(row);
      row &= row - 1;
      if (v > u)
        c.add_edge(u, v);
    }
  }
  return c;
}

auto is_connected(const Graph &g) -> bool {
  const Row all = g.vertex_mask();
  Row seen = 1;
  Row frontier = 1;
  while (frontier) {
    Row next = 0;
    while (frontier) {
      const int v = std::countr_zero(frontier);
      frontier &= frontier - 1;
      next |= g.neighbours(v);
    }
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == all;
}

auto relabel(const Graph &g, std::span<const int> perm) -> Graph {
  const int n = g.order();
  if (static_cast<int>(perm.size()) != n)
    throw GraphError("permutation size does not match vertex count");
  Graph h(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (g.adjacent(u, v))
        h.add_edge(perm[u], perm[v]);
  return h;
}

auto delete_vertex(const Graph &g, int v) -> Graph {
  const int n = g.order();
  if (n < 2 || v < 0 || v >= n)
    throw GraphError("cannot delete vertex " + std::to_string(v));
  Graph h(n - 1);
  auto shift = [v](int x) { return x < v ? x : x - 1; };
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (a != v && b != v && g.adjacent(a, b))
        h.add_edge(shift(a), shift(b));
  return h;
}

auto make_complete(int n) -> Graph {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      g.add_edge(u, v);
  return g;
}

auto make_complete_minus_edge(int n) -> Graph {
  if (n < 2)
    throw GraphError("K_n minus an edge needs n >= 2");
  Graph g = make_complete(n);
  g.remove_edge(0, 1);
  return g;
}

auto make_cycle(int n) -> Graph {
  if (n < 3)
    throw GraphError("cycle needs n >= 3");
  Graph g(n);
  for (int v = 0; v < n; ++v)
    g.add_edge(v, (v + 1) % n);
  return g;
}

auto make_path(int n) -> Graph {
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v)
    g.add_edge(v, v + 1);
  return g;
}

auto make_star(int leaves) -> Graph {
  Graph g(leaves + 1);
  for (int v = 1; v <= leaves; ++v)
    g.add_edge(0, v);
  return g;
}

auto make_star_k2_complement(int n) -> Graph {
  if (n < 5)
    throw GraphError("star + K2 complement needs n >= 5");
  Graph c(n);
  c.add_edge(1, 2);
  for (int v = 3; v < n; ++v)
    c.add_edge(0, v);
  return complement(c);
}

}  // namespace signless
