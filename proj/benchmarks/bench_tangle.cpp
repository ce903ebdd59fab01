#include <benchmark/benchmark.h>

#include <algorithm>
#include <random>

#include "tangle/breakpoint_dp.hpp"
#include "tangle/fpt.hpp"
#include "tangle/hardness.hpp"
#include "tangle/sbt.hpp"

namespace {

tangle::Permutation shuffled(int n, std::uint64_t seed) {
  std::vector<int> v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = i + 1;
  std::mt19937_64 rng(seed);
  std::shuffle(v.begin(), v.end(), rng);
  return tangle::Permutation(std::move(v));
}

void BM_BinaryDp(benchmark::State& state) {
  const auto t = tangle::random_instance(7, static_cast<int>(state.range(0)), tangle::Shape::binary);
  for (auto _ : state) benchmark::DoNotOptimize(tangle::min_blocks_binary(t, tangle::Objective::breakpoints));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_BinaryDp)->RangeMultiplier(2)->Range(64, 1024)->Complexity();

void BM_CompleteDp(benchmark::State& state) {
  const auto t = tangle::random_instance(7, static_cast<int>(state.range(0)), tangle::Shape::complete);
  const auto mode = state.range(1) == 0 ? tangle::SpaceMode::full : tangle::SpaceMode::compact;
  for (auto _ : state) benchmark::DoNotOptimize(tangle::min_blocks_complete(t, tangle::Objective::breakpoints, mode));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_CompleteDp)->ArgsProduct({{256, 1024, 4096}, {0, 1}});

void BM_GreedySort(benchmark::State& state) {
  const auto pi = shuffled(static_cast<int>(state.range(0)), 11);
  for (auto _ : state) benchmark::DoNotOptimize(tangle::greedy_sort(pi));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_GreedySort)->RangeMultiplier(4)->Range(64, 4096)->Complexity();

void BM_ExactDistance(benchmark::State& state) {
  const auto pi = shuffled(static_cast<int>(state.range(0)), 13);
  for (auto _ : state) benchmark::DoNotOptimize(tangle::exact_distance(pi));
}
BENCHMARK(BM_ExactDistance)->DenseRange(6, 9);

void BM_Solve(benchmark::State& state) {
  const auto t = tangle::random_instance(17, static_cast<int>(state.range(0)), tangle::Shape::binary);
  const int k = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(tangle::solve(t, k));
}
BENCHMARK(BM_Solve)->ArgsProduct({{8, 12, 16}, {1, 2, 3}});

void BM_ApproxPipeline(benchmark::State& state) {
  const auto t = tangle::random_instance(19, static_cast<int>(state.range(0)), tangle::Shape::complete);
  for (auto _ : state) benchmark::DoNotOptimize(tangle::approximate_otbcm(t));
}
BENCHMARK(BM_ApproxPipeline)->Arg(1024)->Arg(4096)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
