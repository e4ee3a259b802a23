#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "signless/graph.hpp"

namespace signless {

inline constexpr int kMaxCanonicalOrder = 10;

/// Upper triangle packed in graph6 bit order, x(0,1) in the most significant
/// used bit, so integer order equals lexicographic order of the bit strings.
/// Only meaningful together with a vertex count; n <= 11 fits.
using GraphCode = std::uint64_t;

auto graph_code(const Graph &g) -> GraphCode;
auto graph_from_code(int n, GraphCode code) -> Graph;

struct CanonicalLabeling {
  GraphCode code = 0;
  /// order[p] is the vertex of the input that receives canonical label p.
  std::array<std::int8_t, kMaxCanonicalOrder> order{};
};

/**
 * Canonical labeling by equitable refinement plus individualisation search.
 *
 * The root partition is the coarsest equitable refinement of the unit
 * partition (cells ordered by neighbour counts, ascending). The search
 * individualises each vertex of the first non-singleton cell, refines, and
 * keeps the leaf with the least code. Branches equivalent under
 * automorphisms found so far (twin transpositions are seeded up front) are
 * skipped. Throws GraphError for n > kMaxCanonicalOrder.
 */
auto canonical_labeling(const Graph &g) -> CanonicalLabeling;

auto canonical_graph(const Graph &g) -> Graph;

/// graph6 of the canonical representative; equal iff isomorphic.
auto canonical_form(const Graph &g) -> std::string;

/// Vertices in the last cell of the root equitable partition. The vertex
/// receiving the last canonical label always lies here.
auto last_root_cell(const Graph &g) -> Row;

}  // namespace signless
