#include <benchmark/benchmark.h>

#include <random>

#include "signless/canonical.hpp"
#include "signless/enumerate.hpp"
#include "signless/spectral.hpp"
#include "signless/verify.hpp"

namespace {

using namespace signless;

auto random_graph(int n, std::uint64_t seed) -> Graph {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(0.5);
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng))
        g.add_edge(u, v);
  return g;
}

void BM_EigenSym(benchmark::State &state) {
  const SymMatrix q = signless_laplacian(random_graph(static_cast<int>(state.range(0)), 1));
  for (auto _ : state)
    benchmark::DoNotOptimize(eigen_sym(q));
}
BENCHMARK(BM_EigenSym)->Arg(6)->Arg(9)->Arg(16)->Arg(32);

void BM_CanonicalLabeling(benchmark::State &state) {
  const Graph g = random_graph(static_cast<int>(state.range(0)), 2);
  for (auto _ : state)
    benchmark::DoNotOptimize(canonical_labeling(g));
}
BENCHMARK(BM_CanonicalLabeling)->Arg(6)->Arg(8)->Arg(10);

void BM_CanonicalLabelingComplete(benchmark::State &state) {
  const Graph g = make_complete(10);
  for (auto _ : state)
    benchmark::DoNotOptimize(canonical_labeling(g));
}
BENCHMARK(BM_CanonicalLabelingComplete);

void BM_Enumerate(benchmark::State &state) {
  EnumSpec spec;
  spec.n = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(enumerate_graphs(spec, [](const Graph &) {}));
}
BENCHMARK(BM_Enumerate)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);

void BM_VerifyTheorem(benchmark::State &state) {
  EnumSpec spec;
  spec.n = static_cast<int>(state.range(0));
  spec.connected_only = true;
  for (auto _ : state)
    benchmark::DoNotOptimize(verify_bound(spec, BoundKind::theorem));
}
BENCHMARK(BM_VerifyTheorem)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
