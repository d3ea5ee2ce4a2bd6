#include <benchmark/benchmark.h>

#include "rsma/allocator.hpp"
#include "rsma/channel.hpp"
#include "rsma/precoding.hpp"
#include "rsma/rates.hpp"
#include "rsma/specfun.hpp"

namespace {

using namespace rsma;

void BM_LambertW0(benchmark::State& state) {
  double x = 0.5;
  for (auto _ : state) {
    benchmark::DoNotOptimize(specfun::lambert_w0(x));
    x = x < 1e6 ? x * 1.7 : 0.5;
  }
}
BENCHMARK(BM_LambertW0);

void BM_ZfPrecoders(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const SystemConfig config = uniform_config(n, n + 4, 100.0, 1, 3);
  const UserGroups groups = default_groups(config);
  std::uint64_t i = 0;
  for (auto _ : state) {
    const ChannelRealization r = draw_channel(config, i++);
    benchmark::DoNotOptimize(zf_precoders(r, groups));
  }
}
BENCHMARK(BM_ZfPrecoders)->Arg(4)->Arg(8)->Arg(16);

void BM_CommonPrecoder(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const SystemConfig config = uniform_config(n, n + 4, 100.0, 1, 3);
  std::uint64_t i = 0;
  for (auto _ : state) {
    const ChannelRealization r = draw_channel(config, i++);
    benchmark::DoNotOptimize(common_precoder(r));
  }
}
BENCHMARK(BM_CommonPrecoder)->Arg(4)->Arg(8)->Arg(16);

void BM_ErgodicRatesZf(benchmark::State& state) {
  const SystemConfig config = uniform_config(4, 6, 100.0, static_cast<int>(state.range(0)), 1);
  const UserGroups groups = default_groups(config);
  for (auto _ : state) benchmark::DoNotOptimize(ergodic_rates_zf(config, groups, 0.3));
}
BENCHMARK(BM_ErgodicRatesZf)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);

void BM_ErgodicRatesMrt(benchmark::State& state) {
  const SystemConfig config = uniform_config(4, 6, 100.0, static_cast<int>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(ergodic_rates_mrt(config, 0.3));
}
BENCHMARK(BM_ErgodicRatesMrt)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);

void BM_Select(benchmark::State& state) {
  const SystemConfig config = uniform_config(8, 10, 1000.0, 1, 1);
  const UserGroups groups = default_groups(config);
  for (auto _ : state) benchmark::DoNotOptimize(select(config, groups));
}
BENCHMARK(BM_Select);

}  // namespace

BENCHMARK_MAIN();
