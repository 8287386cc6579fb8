#include <benchmark/benchmark.h>

#include <cstdint>
#include <string>

#include "stoes/laws.hpp"

namespace {

void BM_ProbSomeoneScreams(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(stoes::prob_someone_screams(n));
}
BENCHMARK(BM_ProbSomeoneScreams)->Arg(10)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);

void BM_ScreamPmf(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    for (std::uint64_t k = 0; k <= n / 2; ++k) benchmark::DoNotOptimize(stoes::scream_pmf(n, k));
  }
}
BENCHMARK(BM_ScreamPmf)->Arg(10)->Arg(50)->Unit(benchmark::kMillisecond);

void BM_LawTable(benchmark::State& state) {
  const auto kind = static_cast<stoes::TableKind>(state.range(0));
  const auto n = static_cast<std::size_t>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(stoes::make_law_table(kind, n, stoes::Model::toes));
  state.SetLabel(std::string(stoes::to_string(kind)));
}
BENCHMARK(BM_LawTable)
    ->Args({static_cast<int>(stoes::TableKind::component_pmf), 12})
    ->Args({static_cast<int>(stoes::TableKind::core_size_pmf), 100})
    ->Args({static_cast<int>(stoes::TableKind::cycle_mean), 100})
    ->Args({static_cast<int>(stoes::TableKind::component_mean), 100})
    ->Unit(benchmark::kMillisecond);

}  // namespace
