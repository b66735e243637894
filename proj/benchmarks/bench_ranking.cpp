#include <benchmark/benchmark.h>

#include <vector>

#include "ranklab/generators.hpp"
#include "ranklab/kernel.hpp"
#include "ranklab/probability.hpp"
#include "ranklab/ranking.hpp"

using namespace ranklab;

namespace {

void BM_OnlineMatch(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto inst = gen_random(n, n, 0.3, 7);
  for (auto _ : state) benchmark::DoNotOptimize(online_match(inst));
}
BENCHMARK(BM_OnlineMatch)->Arg(8)->Arg(32)->Arg(64);

void BM_KernelMatch(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto inst = gen_random(n, n, 0.3, 7);
  const IndexedInstance kernel(inst);
  std::vector<std::uint8_t> ranking(n);
  for (std::size_t k = 0; k < n; ++k) ranking[k] = static_cast<std::uint8_t>(k);
  std::vector<std::int8_t> partner(kernel.online_count());
  for (auto _ : state) benchmark::DoNotOptimize(kernel.match(ranking, partner));
}
BENCHMARK(BM_KernelMatch)->Arg(8)->Arg(32)->Arg(64);

void BM_ExactExpectation(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto inst = gen_perfect(n, 0.4, 3).instance;
  for (auto _ : state) benchmark::DoNotOptimize(exact_expected_size(inst));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(rank_statistics(inst).permutations));
}
BENCHMARK(BM_ExactExpectation)->DenseRange(4, 8)->Unit(benchmark::kMillisecond);

void BM_MonteCarlo(benchmark::State& state) {
  const auto inst = gen_random(16, 16, 0.25, 5);
  const auto samples = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(mc_expected_size(inst, samples, 1));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_MonteCarlo)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
