#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "syzstab/generic_line.hpp"
#include "syzstab/monomial_stability.hpp"
#include "syzstab/search.hpp"
#include "syzstab/sections.hpp"

namespace {

using namespace syzstab;

// Random primary family: pure powers of every variable plus mixed fillers.
MonomialFamily randomFamily(std::size_t n, std::size_t vars, long maxExp, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> exp(0, maxExp);
  std::vector<Monomial> members;
  for (std::size_t j = 0; j < vars; ++j) members.push_back(Monomial::purePower(vars, j, exp(rng) + 1));
  while (members.size() < n) {
    std::vector<Integer> e(vars);
    for (auto& x : e) x = exp(rng);
    members.emplace_back(std::move(e));
  }
  return MonomialFamily(std::move(members));
}

void BM_MaxSlopePruned(benchmark::State& state) {
  const auto family = randomFamily(static_cast<std::size_t>(state.range(0)), 4, 6, 7);
  for (auto _ : state) benchmark::DoNotOptimize(maxSlope(family));
}
BENCHMARK(BM_MaxSlopePruned)->DenseRange(6, 14, 4);

void BM_MaxSlopeBruteForce(benchmark::State& state) {
  const auto family = randomFamily(static_cast<std::size_t>(state.range(0)), 4, 6, 7);
  for (auto _ : state) benchmark::DoNotOptimize(maxSlopeBruteForce(family));
}
BENCHMARK(BM_MaxSlopeBruteForce)->DenseRange(6, 14, 4);

void BM_SyzygySectionDim(benchmark::State& state) {
  const PolyFamily family(randomFamily(4, 3, 4, 11));
  const long twist = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(syzygySectionDim(family, twist));
}
BENCHMARK(BM_SyzygySectionDim)->Arg(6)->Arg(10)->Arg(14);

void BM_LineTest(benchmark::State& state) {
  const PolyFamily family(MonomialFamily({{3, 0, 0}, {0, 3, 0}, {0, 0, 3}, {1, 1, 1}}));
  for (auto _ : state) benchmark::DoNotOptimize(lineIndependenceTest(family, {.trials = 16, .seed = 1}));
}
BENCHMARK(BM_LineTest);

void BM_Search(benchmark::State& state) {
  const SearchSpec spec{.N = 2, .d = 4, .n = static_cast<std::size_t>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(findSemistableFamily(spec));
}
BENCHMARK(BM_Search)->DenseRange(3, 9, 2);

}  // namespace

BENCHMARK_MAIN();
