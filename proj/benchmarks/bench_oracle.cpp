#include <benchmark/benchmark.h>

#include "quasichar/families.hpp"
#include "quasichar/oracle.hpp"

using namespace quasichar;

static void BM_CountComplementMid4(benchmark::State& state) {
  const auto a = midhyperplane(4);
  const auto q = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(count_complement(a, q));
  state.counters["points/s"] = benchmark::Counter(static_cast<double>(q * q * q * q) * state.iterations(),
                                                  benchmark::Counter::kIsRate);
}
BENCHMARK(BM_CountComplementMid4)->Arg(10)->Arg(30)->Unit(benchmark::kMillisecond);

static void BM_CountComplementSingleThread(benchmark::State& state) {
  const auto a = root_system_spec('B', 3).arrangement();
  OracleOptions opts;
  opts.threads = 1;
  for (auto _ : state) benchmark::DoNotOptimize(count_complement(a, 40, opts));
}
BENCHMARK(BM_CountComplementSingleThread)->Unit(benchmark::kMillisecond);
