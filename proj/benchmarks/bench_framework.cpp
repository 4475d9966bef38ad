#include <benchmark/benchmark.h>

#include "dcamb/cluster_oracle.hpp"
#include "dcamb/doubled_framework.hpp"
#include "dcamb/fan_geometry.hpp"
#include "dcamb/framework_verify.hpp"

namespace {

void BM_BuildDoubled(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(dcamb::build(n));
}
BENCHMARK(BM_BuildDoubled)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

void BM_ExchangeGraph(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(dcamb::exchange_graph(n));
}
BENCHMARK(BM_ExchangeGraph)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

void BM_VerifyAll(benchmark::State& state) {
  const auto g = dcamb::build(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(dcamb::verify_all(g));
}
BENCHMARK(BM_VerifyAll)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

void BM_Compare(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto g = dcamb::build(n);
  const auto oracle = dcamb::exchange_graph(n);
  for (auto _ : state) benchmark::DoNotOptimize(dcamb::compare(g, oracle));
}
BENCHMARK(BM_Compare)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

// Point location dominates; the sample count is the range argument.
void BM_CheckFan(benchmark::State& state) {
  const auto g = dcamb::build(4);
  const auto samples = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(dcamb::check_fan(g, samples, 20240611));
}
BENCHMARK(BM_CheckFan)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
