#include <benchmark/benchmark.h>

#include <random>

#include "drinfeld/discrete_oracle.hpp"
#include "drinfeld/smith.hpp"
#include "drinfeld/string_centre.hpp"
#include "drinfeld/table1.hpp"

using namespace drinfeld;

static IntMatrix random_matrix(std::size_t n, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> d(-20, 20);
  IntMatrix m(n, n, Integer(0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = d(rng);
  return m;
}

static void BM_Smith(benchmark::State& state) {
  const auto m = random_matrix(static_cast<std::size_t>(state.range(0)), 7);
  for (auto _ : state) benchmark::DoNotOptimize(lattice::snf(m));
}
BENCHMARK(BM_Smith)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

static void BM_SimplyConnectedE7(benchmark::State& state) {
  const roots::SimpleType e7{roots::Series::E, 7};
  for (auto _ : state) benchmark::DoNotOptimize(centre::sc_centre(e7, Integer(state.range(0))));
}
BENCHMARK(BM_SimplyConnectedE7)->Arg(1)->Arg(6);

static void BM_SO4Quotient(benchmark::State& state) {
  const roots::SimpleType a1{roots::Series::A, 1};
  centre::GroupSpec s;
  s.simples = {{a1, Integer(2)}, {a1, Integer(6)}};
  s.kernel = {{{}, {{Integer(1)}, {Integer(1)}}}};
  for (auto _ : state) benchmark::DoNotOptimize(centre::quotient_centre(s));
}
BENCHMARK(BM_SO4Quotient);

static void BM_Table1(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(table1::table(6));
}
BENCHMARK(BM_Table1)->Unit(benchmark::kMillisecond);

static void BM_BruteCentre(benchmark::State& state) {
  const auto w = oracle::std_cocycle(Integer(state.range(0)), Integer(1));
  for (auto _ : state) benchmark::DoNotOptimize(oracle::brute_centre(w));
}
BENCHMARK(BM_BruteCentre)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
