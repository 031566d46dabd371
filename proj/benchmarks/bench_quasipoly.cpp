#include <benchmark/benchmark.h>

#include "quasichar/families.hpp"
#include "quasichar/genfunc.hpp"
#include "quasichar/quasipoly.hpp"

using namespace quasichar;

static void BM_LatticeSweepMid(benchmark::State& state) {
  const auto a = midhyperplane(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(signed_profile_counts(a));
}
BENCHMARK(BM_LatticeSweepMid)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

static void BM_ExhaustiveSweepMid(benchmark::State& state) {
  const auto a = midhyperplane(static_cast<std::size_t>(state.range(0)));
  SweepOptions opts;
  opts.strategy = SweepStrategy::Exhaustive;
  for (auto _ : state) benchmark::DoNotOptimize(signed_profile_counts(a, opts));
}
BENCHMARK(BM_ExhaustiveSweepMid)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

static void BM_LcmPeriodMid5(benchmark::State& state) {
  const auto a = midhyperplane(5);
  for (auto _ : state) benchmark::DoNotOptimize(lcm_period(a));
}
BENCHMARK(BM_LcmPeriodMid5)->Unit(benchmark::kMillisecond);

static void BM_RootSystemViaGF(benchmark::State& state) {
  const auto spec = root_system_spec('E', 6);
  for (auto _ : state) benchmark::DoNotOptimize(root_system_quasipolynomial(spec));
}
BENCHMARK(BM_RootSystemViaGF)->Unit(benchmark::kMillisecond);

static void BM_SimplifyMid5(benchmark::State& state) {
  const auto gf = gf_from_quasipoly(characteristic_quasipolynomial(midhyperplane(5)));
  for (auto _ : state) benchmark::DoNotOptimize(simplify(gf));
}
BENCHMARK(BM_SimplifyMid5)->Unit(benchmark::kMillisecond);
