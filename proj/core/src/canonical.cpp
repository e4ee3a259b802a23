#include "signless/canonical.hpp"

#include <algorithm>
#include <string>

#include "signless/graph6.hpp"

namespace signless {

auto graph_code(const Graph &g) -> GraphCode {
  const int n = g.order();
  if (n > 11)
    throw GraphError("graph_code: n > 11 does not fit in 64 bits");
  GraphCode code = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i)
      code = (code << 1) | (g.adjacent(i, j) ? 1U : 0U);
  return code;
}

auto graph_from_code(int n, GraphCode code) -> Graph {
  Graph g(n);
  int bit = n * (n - 1) / 2;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i)
      if ((code >> --bit) & 1U)
        g.add_edge(i, j);
  return g;
}

namespace {

constexpr int kCap = 16;
constexpr int kMaxAutomorphisms = 48;

using Perm = std::array<std::int8_t, kCap>;

/// Ordered partition: elems in position order, bit p of starts set iff a
/// cell begins at position p.
struct Partition {
  std::array<std::int8_t, kCap> elems{};
  std::uint32_t starts = 1;
};

class Refiner {
 public:
  Refiner(const Row *adj, int n) : adj_(adj), n_(n) {}

  auto next_start(const Partition &p, int pos) const -> int {
    const std::uint32_t above = p.starts >> (pos + 1);
    return above ? pos + 1 + std::countr_zero(above) : n_;
  }

  auto discrete(const Partition &p) const -> bool {
    return std::popcount(p.starts) == n_;
  }

  auto refine(Partition &p) const -> void {
    bool changed = true;
    while (changed) {
      changed = false;
      for (int s = 0; s < n_ && !changed; s = next_start(p, s)) {
        const int se = next_start(p, s);
        Row mask = 0;
        for (int i = s; i < se; ++i)
          mask |= Row{1} << p.elems[i];
        for (int c = 0; c < n_;) {
          const int ce = next_start(p, c);
          if (ce - c > 1 && split(p, c, ce, mask))
            changed = true;
          c = ce;
        }
      }
    }
  }

  /// Moves v to the front of its cell and makes it a singleton.
  auto individualise(Partition &p, int pos) const -> void {
    int cell = pos;
    while (!((p.starts >> cell) & 1U))
      --cell;
    std::swap(p.elems[cell], p.elems[pos]);
    p.starts |= std::uint32_t{1} << (cell + 1);
  }

 private:
  auto split(Partition &p, int c, int ce, Row mask) const -> bool {
    std::array<int, kCap> cnt{};
    bool differ = false;
    for (int i = c; i < ce; ++i) {
      cnt[i] = std::popcount(adj_[p.elems[i]] & mask);
      differ |= cnt[i] != cnt[c];
    }
    if (!differ)
      return false;
    for (int i = c + 1; i < ce; ++i) {
      const int key = cnt[i];
      const auto v = p.elems[i];
      int j = i - 1;
      while (j >= c && cnt[j] > key) {
        cnt[j + 1] = cnt[j];
        p.elems[j + 1] = p.elems[j];
        --j;
      }
      cnt[j + 1] = key;
      p.elems[j + 1] = v;
    }
    for (int i = c + 1; i < ce; ++i)
      if (cnt[i] != cnt[i - 1])
        p.starts |= std::uint32_t{1} << i;
    return true;
  }

  const Row *adj_;
  int n_;
};

auto unit_partition(int n) -> Partition {
  Partition p;
  for (int i = 0; i < n; ++i)
    p.elems[i] = static_cast<std::int8_t>(i);
  p.starts = 1;
  return p;
}

class Search {
 public:
  Search(const Graph &g) : n_(g.order()), refiner_(adj_.data(), n_) {
    for (int v = 0; v < n_; ++v)
      adj_[v] = g.neighbours(v);
    seed_twins();
  }

  auto run() -> CanonicalLabeling {
    Partition root = unit_partition(n_);
    refiner_.refine(root);
    descend(root, 0);
    CanonicalLabeling out;
    out.code = best_code_;
    for (int i = 0; i < n_; ++i)
      out.order[i] = best_order_[i];
    return out;
  }

 private:
  // Twins (same neighbourhood apart from each other) can be swapped by an
  // automorphism that fixes every other vertex.
  auto seed_twins() -> void {
    Row assigned = 0;
    for (int u = 0; u < n_; ++u) {
      if ((assigned >> u) & 1U)
        continue;
      for (int v = u + 1; v < n_; ++v) {
        if ((assigned >> v) & 1U)
          continue;
        const Row bu = Row{1} << u;
        const Row bv = Row{1} << v;
        if ((adj_[u] & ~bv) == (adj_[v] & ~bu)) {
          Perm t = identity();
          t[u] = static_cast<std::int8_t>(v);
          t[v] = static_cast<std::int8_t>(u);
          add_automorphism(t);
          assigned |= bv;
        }
      }
    }
  }

  auto identity() const -> Perm {
    Perm p{};
    for (int i = 0; i < kCap; ++i)
      p[i] = static_cast<std::int8_t>(i);
    return p;
  }

  auto add_automorphism(const Perm &p) -> void {
    if (static_cast<int>(autos_.size()) < kMaxAutomorphisms)
      autos_.push_back(p);
  }

  auto leaf_code(const Partition &p) const -> GraphCode {
    GraphCode code = 0;
    for (int j = 1; j < n_; ++j) {
      const Row row = adj_[p.elems[j]];
      for (int i = 0; i < j; ++i)
        code = (code << 1) | ((row >> p.elems[i]) & 1U);
    }
    return code;
  }

  auto leaf(const Partition &p) -> void {
    const GraphCode code = leaf_code(p);
    if (!have_best_) {
      have_best_ = true;
      best_code_ = first_code_ = code;
      best_order_ = first_order_ = p.elems;
      return;
    }
    auto record = [&](const std::array<std::int8_t, kCap> &other) {
      Perm gamma = identity();
      bool trivial = true;
      for (int i = 0; i < n_; ++i) {
        gamma[p.elems[i]] = other[i];
        trivial &= p.elems[i] == other[i];
      }
      if (!trivial)
        add_automorphism(gamma);
    };
    if (code == first_code_)
      record(first_order_);
    else if (code == best_code_)
      record(best_order_);
    if (code < best_code_) {
      best_code_ = code;
      best_order_ = p.elems;
    }
  }

  auto find(std::array<std::int8_t, kCap> &parent, int x) const -> int {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }

  /// Orbit representatives under the automorphisms fixing `fixed` pointwise.
  auto orbits(Row fixed) const -> std::array<std::int8_t, kCap> {
    std::array<std::int8_t, kCap> parent = identity();
    for (const Perm &gamma : autos_) {
      bool fixes = true;
      for (Row f = fixed; f && fixes; f &= f - 1) {
        const int x = std::countr_zero(f);
        fixes = gamma[x] == x;
      }
      if (!fixes)
        continue;
      for (int x = 0; x < n_; ++x) {
        const int a = find(parent, x);
        const int b = find(parent, gamma[x]);
        if (a != b)
          parent[std::max(a, b)] = static_cast<std::int8_t>(std::min(a, b));
      }
    }
    for (int x = 0; x < n_; ++x)
      parent[x] = static_cast<std::int8_t>(find(parent, x));
    return parent;
  }

  auto descend(const Partition &p, Row fixed) -> void {
    if (refiner_.discrete(p)) {
      leaf(p);
      return;
    }
    int cell = 0;
    int cell_end = refiner_.next_start(p, 0);
    while (cell_end - cell == 1) {
      cell = cell_end;
      cell_end = refiner_.next_start(p, cell);
    }

    std::array<std::int8_t, kCap> members{};
    const int size = cell_end - cell;
    for (int i = 0; i < size; ++i)
      members[i] = p.elems[cell + i];

    Row tried = 0;
    std::size_t seen_autos = static_cast<std::size_t>(-1);
    std::array<std::int8_t, kCap> orbit{};
    for (int i = 0; i < size; ++i) {
      const int v = members[i];
      if (tried) {
        if (seen_autos != autos_.size()) {
          orbit = orbits(fixed);
          seen_autos = autos_.size();
        }
        bool redundant = false;
        for (Row t = tried; t && !redundant; t &= t - 1)
          redundant = orbit[std::countr_zero(t)] == orbit[v];
        if (redundant)
          continue;
      }
      Partition child = p;
      int pos = cell;
      while (child.elems[pos] != v)
        ++pos;
      refiner_.individualise(child, pos);
      refiner_.refine(child);
      descend(child, fixed | (Row{1} << v));
      tried |= Row{1} << v;
    }
  }

  int n_;
  std::array<Row, kCap> adj_{};
  Refiner refiner_;
  std::vector<Perm> autos_;
  bool have_best_ = false;
  GraphCode best_code_ = 0;
  GraphCode first_code_ = 0;
  std::array<std::int8_t, kCap> best_order_{};
  std::array<std::int8_t, kCap> first_order_{};
};

auto check_order(const Graph &g) -> void {
  if (g.order() > kMaxCanonicalOrder)
    throw GraphError("canonical form supports at most " + std::to_string(kMaxCanonicalOrder) +
                     " vertices, got " + std::to_string(g.order()));
}

}  // namespace

auto canonical_labeling(const Graph &g) -> CanonicalLabeling {
  check_order(g);
  return Search(g).run();
}

auto canonical_graph(const Graph &g) -> Graph {
  return graph_from_code(g.order(), canonical_labeling(g).code);
}

auto canonical_form(const Graph &g) -> std::string {
  return to_graph6(canonical_graph(g));
}

auto last_root_cell(const Graph &g) -> Row {
  check_order(g);
  const int n = g.order();
  std::array<Row, kCap> adj{};
  for (int v = 0; v < n; ++v)
    adj[v] = g.neighbours(v);
  Refiner refiner(adj.data(), n);
  Partition p = unit_partition(n);
  refiner.refine(p);
  int last = n - 1;
  while (!((p.starts >> last) & 1U))
    --last;
  Row cell = 0;
  for (int i = last; i < n; ++i)
    cell |= Row{1} << p.elems[i];
  return cell;
}

}  // namespace signless
