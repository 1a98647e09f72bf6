// Serial reference vs OpenMP kernels.

#include <benchmark/benchmark.h>

#include "tutte/benzenoid.hpp"
#include "tutte/corpus.hpp"
#include "tutte/tutte.hpp"

using namespace tutte;

namespace {

MultiGraph subset_input(int edges) {
  return random_connected_multigraph(8, static_cast<std::size_t>(edges), 99, 0.05);
}

void BM_SubsetSerial(benchmark::State& state) {
  const MultiGraph g = subset_input(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(tutte_subset_serial(g));
}

void BM_SubsetParallel(benchmark::State& state) {
  const MultiGraph g = subset_input(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(tutte_subset(g));
}

void BM_KirchhoffSerial(benchmark::State& state) {
  const MultiGraph g = build_chain(Chain::pyrene, static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(count_spanning_trees_kirchhoff_serial(g));
}

void BM_KirchhoffParallel(benchmark::State& state) {
  const MultiGraph g = build_chain(Chain::pyrene, static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(count_spanning_trees_kirchhoff(g));
}

void BM_DelconSerial(benchmark::State& state) {
  const MultiGraph g = build_chain(Chain::triphenylene, static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(tutte_delcon(g));
}

void BM_DelconParallel(benchmark::State& state) {
  const MultiGraph g = build_chain(Chain::triphenylene, static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(tutte_delcon(g, {.parallel = true}));
}

}  // namespace

BENCHMARK(BM_SubsetSerial)->Arg(16)->Arg(20)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SubsetParallel)->Arg(16)->Arg(20)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_KirchhoffSerial)->Arg(10)->Arg(40)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_KirchhoffParallel)->Arg(10)->Arg(40)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DelconSerial)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DelconParallel)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
