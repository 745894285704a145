#include <benchmark/benchmark.h>

#include "llt/bound_oracle.hpp"
#include "llt/llt_builder.hpp"
#include "llt/metric_space.hpp"
#include "llt/random_instances.hpp"
#include "llt/sllt_builder.hpp"
#include "llt/tree_metrics.hpp"

namespace {

llt::MetricSpace planar_instance(int n) {
  llt::Rng rng(0xBEEF + n);
  return llt::random_euclidean(n, 2, rng);
}

void BM_MinimumSpanningTree(benchmark::State& state) {
  const llt::MetricSpace m = planar_instance(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(llt::minimum_spanning_tree(m));
}
BENCHMARK(BM_MinimumSpanningTree)->Arg(64)->Arg(256)->Arg(1024);

void BM_HamiltonianPath(benchmark::State& state) {
  const llt::MetricSpace m = planar_instance(static_cast<int>(state.range(0)));
  const llt::RootedTree mst = llt::minimum_spanning_tree(m);
  for (auto _ : state) benchmark::DoNotOptimize(llt::hamiltonian_path(m, mst, 0));
}
BENCHMARK(BM_HamiltonianPath)->Arg(256)->Arg(1024);

void BM_BuildLlt(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int h = static_cast<int>(state.range(1));
  const llt::MetricSpace m = planar_instance(n);
  for (auto _ : state) benchmark::DoNotOptimize(llt::build_llt(m, h));
}
BENCHMARK(BM_BuildLlt)->Args({256, 3})->Args({256, 8})->Args({256, 32})->Args({1024, 5});

void BM_SlltTransform(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const llt::MetricSpace m = planar_instance(n);
  const llt::LltResult base = llt::build_llt(m, 8);
  for (auto _ : state)
    benchmark::DoNotOptimize(llt::build_sllt(base.tree, m, base.tree.root, 0.5));
}
BENCHMARK(BM_SlltTransform)->Arg(256)->Arg(1024);

void BM_HighTemplate(benchmark::State& state) {
  const int xi = static_cast<int>(state.range(0));
  const int h = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(llt::build_high_tree(xi, h));
}
BENCHMARK(BM_HighTemplate)->Args({3, 12})->Args({5, 16});

void BM_ThetaScan(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(llt::scan_theta_trees(n));
}
BENCHMARK(BM_ThetaScan)->Arg(6)->Arg(7);

void BM_MeasureTree(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const llt::MetricSpace m = planar_instance(n);
  const llt::LltResult r = llt::build_llt(m, 8);
  const double mst_w = llt::minimum_spanning_tree(m).weight();
  for (auto _ : state)
    benchmark::DoNotOptimize(
        llt::measure(r.tree, m, {.order = &r.order, .mst_weight = mst_w}));
}
BENCHMARK(BM_MeasureTree)->Arg(256)->Arg(1024);

}  // namespace

BENCHMARK_MAIN();
