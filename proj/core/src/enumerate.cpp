#include "signless/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "signless/canonical.hpp"

namespace signless {

auto EnumSpec::validate() const -> void {
  if (n < 1 || n > kMaxEnumerationOrder)
    throw std::invalid_argument("enumeration supports 1..10 vertices, got " + std::to_string(n));
  const int max_edges = n * (n - 1) / 2;
  if (m_min && (*m_min < 0 || *m_min > max_edges))
    throw std::invalid_argument("m_min outside 0.." + std::to_string(max_edges));
  if (m_max && (*m_max < 0 || *m_max > max_edges))
    throw std::invalid_argument("m_max outside 0.." + std::to_string(max_edges));
  if (m_min && m_max && *m_min > *m_max)
    throw std::invalid_argument("m_min exceeds m_max");
}

auto EnumSpec::accepts_edge_count(int m) const -> bool {
  return (!m_min || m >= *m_min) && (!m_max || m <= *m_max);
}

namespace {

/// Degree multisets of g - a and g - b agree.
auto same_deleted_degrees(const Graph &g, int a, int b) -> bool {
  const int n = g.order();
  std::array<int, kMaxEnumerationOrder> da{};
  std::array<int, kMaxEnumerationOrder> db{};
  int ia = 0;
  int ib = 0;
  for (int y = 0; y < n; ++y) {
    if (y != a)
      da[ia++] = g.degree(y) - (g.adjacent(a, y) ? 1 : 0);
    if (y != b)
      db[ib++] = g.degree(y) - (g.adjacent(b, y) ? 1 : 0);
  }
  std::sort(da.begin(), da.begin() + ia);
  std::sort(db.begin(), db.begin() + ib);
  return std::equal(da.begin(), da.begin() + ia, db.begin());
}

/// Calls emit(code) for every accepted child of the canonical parent.
template <class Emit>
auto expand_parent(int n, GraphCode parent_code, const EnumSpec *filter,
                   std::vector<GraphCode> &seen, Emit &&emit) -> void {
  const Graph parent = graph_from_code(n - 1, parent_code);
  const int parent_edges = parent.edge_count();
  const int fresh = n - 1;
  std::array<Row, kMaxEnumerationOrder> rows{};
  seen.clear();

  for (Row subset = 0; subset < (Row{1} << fresh); ++subset) {
    if (filter && !filter->accepts_edge_count(parent_edges + std::popcount(subset)))
      continue;
    for (int v = 0; v < fresh; ++v)
      rows[v] = parent.neighbours(v) | (((subset >> v) & 1U) << fresh);
    rows[fresh] = subset;
    const Graph child = Graph::from_rows(std::span<const Row>(rows.data(), n));
    if (filter && filter->connected_only && !is_connected(child))
      continue;
    if (!((last_root_cell(child) >> fresh) & 1U))
      continue;

    const CanonicalLabeling lab = canonical_labeling(child);
    const int w = lab.order[n - 1];
    if (w != fresh) {
      if (!same_deleted_degrees(child, w, fresh))
        continue;
      if (canonical_labeling(delete_vertex(child, w)).code != parent_code)
        continue;
    }
    if (std::find(seen.begin(), seen.end(), lab.code) != seen.end())
      continue;
    seen.push_back(lab.code);
    emit(lab.code);
  }
}

/// Runs body(worker, chunk) over chunk indices [0, chunks) on `jobs` threads.
template <class Body>
auto run_chunks(std::size_t chunks, int jobs, Body &&body) -> void {
  if (jobs <= 1 || chunks <= 1) {
    for (std::size_t c = 0; c < chunks; ++c)
      body(0, c);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> workers;
  workers.reserve(jobs);
  for (int w = 0; w < jobs; ++w) {
    workers.emplace_back([&, w] {
      for (std::size_t c = next++; c < chunks; c = next++)
        body(w, c);
    });
  }
}

struct Chunking {
  std::size_t size;
  std::size_t count;
};

auto chunking(std::size_t items, int jobs) -> Chunking {
  const std::size_t target = static_cast<std::size_t>(std::max(1, jobs)) * 32;
  const std::size_t size = std::max<std::size_t>(1, (items + target - 1) / target);
  return {size, (items + size - 1) / size};
}

/// All canonical codes on n vertices, ordered by parent then subset.
auto expand_level(int n, const std::vector<GraphCode> &parents, int jobs)
    -> std::vector<GraphCode> {
  const Chunking ch = chunking(parents.size(), jobs);
  std::vector<std::vector<GraphCode>> out(ch.count);
  run_chunks(ch.count, jobs, [&](int, std::size_t c) {
    std::vector<GraphCode> seen;
    const std::size_t end = std::min(parents.size(), (c + 1) * ch.size);
    for (std::size_t i = c * ch.size; i < end; ++i)
      expand_parent(n, parents[i], nullptr, seen, [&](GraphCode code) { out[c].push_back(code); });
  });
  std::vector<GraphCode> level;
  for (const auto &part : out)
    level.insert(level.end(), part.begin(), part.end());
  return level;
}

}  // namespace

auto enumerate_graphs_parallel(const EnumSpec &spec, int jobs, const ShardVisitor &visit)
    -> std::uint64_t {
  spec.validate();
  jobs = std::max(1, jobs);
  if (spec.n == 1) {
    if (!spec.accepts_edge_count(0))
      return 0;
    visit(0, Graph(1));
    return 1;
  }

  std::vector<GraphCode> parents{0};
  for (int k = 2; k < spec.n; ++k)
    parents = expand_level(k, parents, jobs);

  const Chunking ch = chunking(parents.size(), jobs);
  std::atomic<std::uint64_t> count{0};
  run_chunks(ch.count, jobs, [&](int worker, std::size_t c) {
    std::vector<GraphCode> seen;
    std::uint64_t local = 0;
    const std::size_t end = std::min(parents.size(), (c + 1) * ch.size);
    for (std::size_t i = c * ch.size; i < end; ++i)
      expand_parent(spec.n, parents[i], &spec, seen, [&](GraphCode code) {
        visit(worker, graph_from_code(spec.n, code));
        ++local;
      });
    count += local;
  });
  return count;
}

auto enumerate_graphs(const EnumSpec &spec, const GraphVisitor &visit) -> std::uint64_t {
  return enumerate_graphs_parallel(spec, 1, [&](int, const Graph &g) { visit(g); });
}

auto enumerate_labeled(int n, const GraphVisitor &visit) -> std::uint64_t {
  if (n < 1 || n > kMaxLabeledOrder)
    throw std::invalid_argument("labeled enumeration supports 1..7 vertices, got " +
                                std::to_string(n));
  const GraphCode total = GraphCode{1} << (n * (n - 1) / 2);
  for (GraphCode code = 0; code < total; ++code)
    visit(graph_from_code(n, code));
  return total;
}

}  // namespace signless
