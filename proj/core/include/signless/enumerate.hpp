#pragma once

#include <cstdint>
#include <functional>
#include <optional>

#include "signless/graph.hpp"

namespace signless {

inline constexpr int kMaxEnumerationOrder = 10;
inline constexpr int kMaxLabeledOrder = 7;

struct EnumSpec {
  int n = 1;
  bool connected_only = false;
  std::optional<int> m_min;
  std::optional<int> m_max;

  /// Throws std::invalid_argument on n outside 1..10 or a bad edge range.
  auto validate() const -> void;
  auto accepts_edge_count(int m) const -> bool;
};

using GraphVisitor = std::function<void(const Graph &)>;
/// Called with the worker index in [0, jobs).
using ShardVisitor = std::function<void(int worker, const Graph &)>;

/**
 * Visits one canonical representative per isomorphism class matching spec.
 *
 * Graphs grow one vertex at a time. A child of parent P is kept when the
 * vertex that receives the last canonical label can be deleted to give back
 * a graph isomorphic to P, and when no earlier child of P had the same
 * canonical form. Filters apply to the final level only.
 *
 * Emission order is deterministic. Returns the number of graphs visited.
 */
auto enumerate_graphs(const EnumSpec &spec, const GraphVisitor &visit) -> std::uint64_t;

/**
 * As enumerate_graphs, but the final level is split by parent across `jobs`
 * threads and visit may be called concurrently (one stream per worker).
 * Only the multiset of visited graphs is deterministic when jobs > 1.
 */
auto enumerate_graphs_parallel(const EnumSpec &spec, int jobs, const ShardVisitor &visit)
    -> std::uint64_t;

/// Every labeled graph on n <= 7 vertices (all 2^(n(n-1)/2) edge sets).
auto enumerate_labeled(int n, const GraphVisitor &visit) -> std::uint64_t;

}  // namespace signless
