// Serial reference kernels against their OpenMP counterparts on chain graphs.
#include <benchmark/benchmark.h>

#include "cactus/chains.hpp"
#include "cactus/kernels.hpp"

namespace {

using namespace cactus;

std::vector<kernels::Mask> chain_masks(Family f, int n) {
  return build_chain(ChainSpec::uniform(f, n)).graph.adjacency_masks();
}

template <kernels::MisTally (*Kernel)(std::span<const kernels::Mask>, kernels::Mask)>
void run(benchmark::State& state, Family f) {
  const auto adj = chain_masks(f, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(adj, 1));
  state.counters["vertices"] = static_cast<double>(adj.size());
}

void BM_scan_serial(benchmark::State& s) { run<kernels::scan_serial>(s, Family::triangular); }
void BM_scan_parallel(benchmark::State& s) { run<kernels::scan_parallel>(s, Family::triangular); }
void BM_pivot_serial(benchmark::State& s) { run<kernels::pivot_serial>(s, Family::hex_para); }
void BM_pivot_parallel(benchmark::State& s) { run<kernels::pivot_parallel>(s, Family::hex_para); }

}  // namespace

// Triangular chains of 8..11 blocks: 17..23 vertices for the subset scan.
BENCHMARK(BM_scan_serial)->DenseRange(8, 11)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_scan_parallel)->DenseRange(8, 11)->Unit(benchmark::kMillisecond)->UseRealTime();
// Para hexagon chains of 5..7 blocks: 26..36 vertices for the pivot search.
BENCHMARK(BM_pivot_serial)->DenseRange(5, 7)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_pivot_parallel)->DenseRange(5, 7)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
