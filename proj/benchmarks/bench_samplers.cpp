#include <benchmark/benchmark.h>

#include <cstdint>
#include <vector>

#include "stoes/mapping.hpp"
#include "stoes/rng.hpp"
#include "stoes/samplers.hpp"

namespace {

void BM_MappingAndDecompose(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  stoes::RngStream rng(1);
  for (auto _ : state) {
    const stoes::Mapping m = stoes::sample_mapping(n, rng);
    benchmark::DoNotOptimize(stoes::decompose(m));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_MappingAndDecompose)->RangeMultiplier(10)->Range(10, 100'000);

void BM_Decompose(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  stoes::RngStream rng(2);
  const stoes::Mapping m = stoes::sample_mapping(n, rng);
  for (auto _ : state) benchmark::DoNotOptimize(stoes::decompose(m));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Decompose)->RangeMultiplier(10)->Range(10, 1'000'000);

void BM_RejectionComponents(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto method = state.range(1) == 0 ? stoes::EsfMethod::feller : stoes::EsfMethod::crp;
  const stoes::ToesComponentSampler sampler(n, method);
  stoes::RngStream rng(3);
  std::uint64_t attempts = 0;
  for (auto _ : state) {
    const auto draw = sampler(rng);
    attempts += draw.attempts;
    benchmark::DoNotOptimize(draw);
  }
  state.counters["attempts"] = benchmark::Counter(static_cast<double>(attempts), benchmark::Counter::kAvgIterations);
}
BENCHMARK(BM_RejectionComponents)->ArgsProduct({{10, 30, 60}, {0, 1}});

void BM_CoreJoint(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const stoes::ToesCoreSampler sampler(n);
  stoes::RngStream rng(4);
  for (auto _ : state) benchmark::DoNotOptimize(sampler(rng));
}
BENCHMARK(BM_CoreJoint)->RangeMultiplier(10)->Range(10, 10'000);

void BM_CoreSizeTable(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(stoes::CoreSizeSampler(n));
}
BENCHMARK(BM_CoreSizeTable)->Arg(10)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);

}  // namespace
