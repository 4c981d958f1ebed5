#include <benchmark/benchmark.h>

#include "cdelab/matrix.hpp"
#include "cdelab/parse.hpp"

using namespace cdelab;

namespace {

void BM_CycloMultiply(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  const Cyclo a = Cyclo::zeta(order) + Cyclo(3);
  const Cyclo b = Cyclo::zeta(order) * Cyclo::zeta(order) - Cyclo(2);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_CycloMultiply)->Arg(3)->Arg(5)->Arg(12);

void BM_RatFuncArithmetic(benchmark::State& state) {
  const RatFunc a = parse_scalar("(1 + z*t) / (1 - t^2)", 3);
  const RatFunc b = parse_scalar("(z - t) / (1 + 2*t)", 3);
  for (auto _ : state) benchmark::DoNotOptimize(a * b + a / b);
}
BENCHMARK(BM_RatFuncArithmetic);

void BM_ParseScalar(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(parse_scalar("(-1 + z^2)/(1 - 2*t)", 3));
}
BENCHMARK(BM_ParseScalar);

// Rank of an n x n matrix over K with entries (i + j t) / (1 + i t).
void BM_RankOverK(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  Matrix<RatFunc> m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      m(i, j) = (RatFunc(static_cast<int>(i)) + RatFunc(static_cast<int>(j)) * RatFunc::t()) /
                (RatFunc(1) + RatFunc(static_cast<int>(i)) * RatFunc::t());
    }
  }
  for (auto _ : state) benchmark::DoNotOptimize(rank(m));
}
BENCHMARK(BM_RankOverK)->Arg(4)->Arg(8)->Arg(12);

}  // namespace

BENCHMARK_MAIN();
