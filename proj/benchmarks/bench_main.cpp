#include <benchmark/benchmark.h>

#include <cstdint>
#include <vector>

#include "meshperm/etree.hpp"
#include "meshperm/local_order.hpp"
#include "meshperm/patching.hpp"
#include "meshperm/pipeline.hpp"
#include "meshperm/quotient.hpp"

using namespace meshperm;

namespace {

AdjacencyGraph grid_graph(index_t k) {
  return mesh_to_graph(make_grid_mesh(k, k));
}

void BM_Patching(benchmark::State& state) {
  AdjacencyGraph g = grid_graph(120);
  index_t target = static_cast<index_t>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(compute_patches(g, target, 0));
  state.SetItemsProcessed(state.iterations() * g.n);
}
BENCHMARK(BM_Patching)->Arg(64)->Arg(256);

void BM_QuotientBuild(benchmark::State& state) {
  AdjacencyGraph g = grid_graph(120);
  GroupMap gmap = compute_patches(g, 256, 0).to_group_map();
  for (auto _ : state)
    benchmark::DoNotOptimize(build_quotient(g, gmap));
  state.SetItemsProcessed(state.iterations() * g.edge_count());
}
BENCHMARK(BM_QuotientBuild);

void BM_QuotientRemove(benchmark::State& state) {
  AdjacencyGraph g = grid_graph(120);
  GroupMap gmap = compute_patches(g, 256, 0).to_group_map();
  QuotientGraph master = build_quotient(g, gmap);
  std::vector<index_t> removed;  // one grid row
  for (index_t v = 60 * 120; v < 61 * 120; ++v) removed.push_back(v);
  for (auto _ : state) {
    state.PauseTiming();
    QuotientGraph q = master;
    state.ResumeTiming();
    quotient_remove(q, g, gmap, removed);
    benchmark::DoNotOptimize(q);
  }
}
BENCHMARK(BM_QuotientRemove);

void BM_RootSeparator(benchmark::State& state) {
  AdjacencyGraph g = grid_graph(120);
  index_t target = static_cast<index_t>(state.range(0));
  GroupMap gmap = compute_patches(g, target, 0).to_group_map();
  QuotientGraph q = build_quotient(g, gmap);
  std::vector<index_t> all(g.n);
  for (index_t v = 0; v < g.n; ++v) all[v] = v;
  SubgraphView gv = induced_subgraph(g, all);
  for (auto _ : state)
    benchmark::DoNotOptimize(get_separator(gv, gmap, q, 0));
  state.SetItemsProcessed(state.iterations() * q.alive_count());
}
BENCHMARK(BM_RootSeparator)->Arg(1)->Arg(64)->Arg(256);

void BM_LocalOrder(benchmark::State& state) {
  AdjacencyGraph g = grid_graph(24);
  OrderMode mode = state.range(0) == 0 ? OrderMode::approx_md : OrderMode::exact_md;
  for (auto _ : state)
    benchmark::DoNotOptimize(minimum_degree(g, mode));
  state.SetItemsProcessed(state.iterations() * g.n);
}
BENCHMARK(BM_LocalOrder)->Arg(0)->Arg(1);

void BM_Pipeline(benchmark::State& state) {
  RunConfig config;
  config.grid_rows = 100;
  config.grid_cols = 100;
  config.patch_size = static_cast<index_t>(state.range(0));
  config.collect_timing = false;
  for (auto _ : state)
    benchmark::DoNotOptimize(run_pipeline(config));
  state.SetItemsProcessed(state.iterations() * 10000);
}
BENCHMARK(BM_Pipeline)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
