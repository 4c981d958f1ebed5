#include <benchmark/benchmark.h>

#include "cdelab/cde.hpp"
#include "cdelab/hecke.hpp"
#include "cdelab/lattice.hpp"
#include "cdelab/parse.hpp"

using namespace cdelab;

namespace {

HeckeSpec spec(HeckeType type, const char* q, int order) {
  HeckeSpec s;
  s.type = type;
  s.q = parse_scalar(q, order);
  s.cyclotomic_order = order;
  return s;
}

void run_cde(benchmark::State& state, const HeckeSpec& s) {
  const auto a = hecke_algebra(s);
  const auto simples = hecke_k_simples(s, extend_to_K(*a));
  for (auto _ : state) benchmark::DoNotOptimize(cde_verify(a, simples));
}

void BM_CdeA2Zeta3(benchmark::State& state) { run_cde(state, spec(HeckeType::A2, "z+t", 3)); }
BENCHMARK(BM_CdeA2Zeta3)->Unit(benchmark::kMillisecond);

void BM_CdeA2AtT(benchmark::State& state) { run_cde(state, spec(HeckeType::A2, "t", 1)); }
BENCHMARK(BM_CdeA2AtT)->Unit(benchmark::kMillisecond);

void BM_CdeA1(benchmark::State& state) { run_cde(state, spec(HeckeType::A1, "-1+t", 1)); }
BENCHMARK(BM_CdeA1)->Unit(benchmark::kMillisecond);

void BM_SplitReducedA2(benchmark::State& state) {
  const auto a = hecke_algebra(spec(HeckeType::A2, "z+t", 3));
  const auto reduced = reduce_to_k(*a);
  for (auto _ : state) benchmark::DoNotOptimize(SplitAlgebra(reduced));
}
BENCHMARK(BM_SplitReducedA2)->Unit(benchmark::kMillisecond);

void BM_LiftIdempotent(benchmark::State& state) {
  const auto a = hecke_algebra(spec(HeckeType::A2, "z+t", 3));
  const SplitAlgebra split(reduce_to_k(*a));
  const auto e = split.idempotents().idempotents.front();
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(lift_idempotent_trunc(e, *a, n));
}
BENCHMARK(BM_LiftIdempotent)->Arg(4)->Arg(16)->Arg(64)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
