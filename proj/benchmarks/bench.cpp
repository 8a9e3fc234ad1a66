#include <benchmark/benchmark.h>

#include "twoouter/forest2.hpp"
#include "twoouter/gen.hpp"
#include "twoouter/oracle.hpp"
#include "twoouter/outerplane.hpp"
#include "twoouter/plane.hpp"

using namespace twoouter;

namespace {

EmbeddedGraph instance(int n, double drop = 0.6) { return gen::random_k_outerplanar(n, n >= 4 ? 2 : 1, 42, drop); }

void BM_Layers(benchmark::State& st) {
  auto g = instance(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(layers(g));
  st.SetComplexityN(st.range(0));
}
BENCHMARK(BM_Layers)->RangeMultiplier(2)->Range(16, 512)->Complexity();

void BM_TwoForests(benchmark::State& st) {
  auto g = instance(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(partition_two_forests(g));
  st.SetComplexityN(st.range(0));
}
BENCHMARK(BM_TwoForests)->RangeMultiplier(2)->Range(16, 256)->Complexity();

void BM_TwoForestsDense(benchmark::State& st) {
  auto g = instance(static_cast<int>(st.range(0)), 0.0);
  for (auto _ : st) benchmark::DoNotOptimize(partition_two_forests(g));
}
BENCHMARK(BM_TwoForestsDense)->RangeMultiplier(2)->Range(16, 128);

void BM_ExtractOuterplane(benchmark::State& st) {
  auto g = instance(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(extract_outerplane(g));
  st.SetComplexityN(st.range(0));
}
BENCHMARK(BM_ExtractOuterplane)->RangeMultiplier(2)->Range(16, 512)->Complexity();

void BM_OracleOuterplane(benchmark::State& st) {
  auto g = instance(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(max_induced_outerplane_exact(g));
}
BENCHMARK(BM_OracleOuterplane)->DenseRange(8, 16, 4);

void BM_OracleForest(benchmark::State& st) {
  auto g = instance(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(max_induced_forest_exact(g));
}
BENCHMARK(BM_OracleForest)->DenseRange(8, 24, 8);

}  // namespace

BENCHMARK_MAIN();
