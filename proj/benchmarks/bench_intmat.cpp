#include <random>

#include <benchmark/benchmark.h>

#include "quasichar/families.hpp"
#include "quasichar/intmat.hpp"

using namespace quasichar;

static void BM_SmithProfileRandom(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> entry(-9, 9);
  IntMatrix s(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) s(r, c) = entry(rng);
  for (auto _ : state) benchmark::DoNotOptimize(smith_profile(s));
}
BENCHMARK(BM_SmithProfileRandom)->Arg(4)->Arg(8)->Arg(16);

static void BM_SmithProfileBigInt(benchmark::State& state) {
  const IntMatrix s = root_system_spec('E', 8).matrix;
  for (auto _ : state) benchmark::DoNotOptimize(smith_profile_bigint(s));
}
BENCHMARK(BM_SmithProfileBigInt);
