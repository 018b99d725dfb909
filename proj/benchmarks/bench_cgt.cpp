#include <random>

#include <benchmark/benchmark.h>

#include "cgt/abelian.hpp"
#include "cgt/action.hpp"
#include "cgt/constructions.hpp"
#include "cgt/matgrp.hpp"
#include "cgt/series.hpp"
#include "cgt/subgroups.hpp"
#include "cgt/word.hpp"

namespace {

void BM_SymmetricClosure(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(cgt::symmetric(n));
}
BENCHMARK(BM_SymmetricClosure)->Arg(4)->Arg(5);

void BM_AllSubgroups(benchmark::State& state) {
  cgt::FinGroup g = cgt::symmetric(4);
  for (auto _ : state)
    benchmark::DoNotOptimize(cgt::all_subgroups(g));
}
BENCHMARK(BM_AllSubgroups);

void BM_CompositionSeries(benchmark::State& state) {
  cgt::FinGroup g = cgt::symmetric(4);
  for (auto _ : state)
    benchmark::DoNotOptimize(cgt::composition_series(g));
}
BENCHMARK(BM_CompositionSeries);

void BM_FactorizationOrbits(benchmark::State& state) {
  const long long n = state.range(0);
  for (auto _ : state)
    benchmark::DoNotOptimize(cgt::factorization_orbits(n, 3));
}
BENCHMARK(BM_FactorizationOrbits)->Arg(216)->Arg(720720);

void BM_StackedBasis(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::mt19937 rng(1);
  std::uniform_int_distribution<int> entry(-50, 50);
  cgt::IntMatrix m(n, n);
  for (auto& x : m.a) x = entry(rng);
  for (auto _ : state)
    benchmark::DoNotOptimize(cgt::stacked_basis(m));
}
BENCHMARK(BM_StackedBasis)->Arg(4)->Arg(8);

void BM_WordReduction(benchmark::State& state) {
  std::mt19937 rng(2);
  std::uniform_int_distribution<int> letter(0, 3), exp(-4, 4);
  std::vector<cgt::Syllable> raw;
  for (int i = 0; i < 200; ++i) raw.push_back({letter(rng), exp(rng)});
  for (auto _ : state)
    benchmark::DoNotOptimize(cgt::reduce(4, raw));
}
BENCHMARK(BM_WordReduction);

void BM_Sl2ToAb(benchmark::State& state) {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> idx(0, 1), coef(-6, 6);
  cgt::SquareIntMatrix m = cgt::SquareIntMatrix::identity(2);
  for (int s = 0; s < 12; ++s) {
    int i = idx(rng), j = 1 - i;
    m = m.mul(cgt::SquareIntMatrix::elementary(2, i, j, coef(rng)));
  }
  for (auto _ : state)
    benchmark::DoNotOptimize(cgt::sl2_to_ab(m));
}
BENCHMARK(BM_Sl2ToAb);

}  // namespace

BENCHMARK_MAIN();
