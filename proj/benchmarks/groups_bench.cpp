#include <benchmark/benchmark.h>

#include "jaglab/algorithms.hpp"
#include "jaglab/family.hpp"
#include "jaglab/graph.hpp"

namespace {

using namespace jaglab;

void BM_CayleyGraph(benchmark::State& state) {
  const char* specs[] = {"sym:n=6", "gl:n=3,p=3", "wreath(grid:d=1,l=2,sym:n=3)"};
  const auto spec = parse_family(specs[state.range(0)]);
  for (auto _ : state) benchmark::DoNotOptimize(build_family(spec).graph.num_nodes());
  state.SetLabel(specs[state.range(0)]);
}
BENCHMARK(BM_CayleyGraph)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

void BM_AbelianOrderingRun(benchmark::State& state) {
  const auto f = build_family("abelian:mod=8,8,4;gens=(1,0,0)(0,1,0)(0,0,1)(4,4,2)");
  for (auto _ : state) benchmark::DoNotOptimize(algo::abelian_ordering_run(f.group, f.cayley).order.size());
}
BENCHMARK(BM_AbelianOrderingRun);

void BM_ReduceDegree(benchmark::State& state) {
  const auto g = build_family("gl:n=3,p=2").graph;
  for (auto _ : state) benchmark::DoNotOptimize(reduce_degree(g).num_nodes());
}
BENCHMARK(BM_ReduceDegree);

void BM_WreathCanonicalPaths(benchmark::State& state) {
  const auto f = build_family("wreath(grid:d=1,l=2,grid:d=2,l=2)");
  const auto w = algo::WreathContext::of(f);
  for (auto _ : state) {
    std::size_t total = 0;
    for (NodeId v = 0; v < f.graph.num_nodes(); ++v) {
      if (algo::wreath_is_number(w, v)) total += algo::wreath_canonical_path(w, v).size();
    }
    benchmark::DoNotOptimize(total);
  }
}
BENCHMARK(BM_WreathCanonicalPaths);

}  // namespace

BENCHMARK_MAIN();
