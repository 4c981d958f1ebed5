#include <benchmark/benchmark.h>

#include "cdelab/sl2.hpp"

using namespace cdelab;

namespace {

void BM_DualityTable(benchmark::State& state) {
  const long gamma = state.range(0);
  const int depth = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(duality_table({Cyclo(gamma)}, depth));
}
BENCHMARK(BM_DualityTable)->Args({2, 8})->Args({4, 14})->Args({-3, 12})->Unit(benchmark::kMillisecond);

void BM_DecomposeProjective(benchmark::State& state) {
  const auto w = validate_window({Cyclo(2)}, true, static_cast<int>(state.range(0)));
  const auto p = reduce_mod_t(build_projective<RatFunc>(w, w->slot_count() - 1));
  for (auto _ : state) benchmark::DoNotOptimize(decompose_projective(p));
}
BENCHMARK(BM_DecomposeProjective)->Arg(6)->Arg(10)->Arg(14)->Unit(benchmark::kMillisecond);

void BM_GradedHom(benchmark::State& state) {
  const auto w = validate_window({Cyclo(0)}, true, static_cast<int>(state.range(0)));
  const auto p = reduce_mod_t(build_projective<RatFunc>(w, w->slot_count() / 2));
  const auto z = verma<Cyclo>(w, 0);
  for (auto _ : state) benchmark::DoNotOptimize(graded_hom(p, z));
}
BENCHMARK(BM_GradedHom)->Arg(6)->Arg(12)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
