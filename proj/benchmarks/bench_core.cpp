#include <benchmark/benchmark.h>

#include "skewmorph/catalog.hpp"
#include "skewmorph/cycles.hpp"
#include "skewmorph/enumerate.hpp"

using namespace skewmorph;

static void BM_EnumerateCyclic(benchmark::State& state) {
  const GroupPtr g = FiniteGroup::cyclic(static_cast<int>(state.range(0)));
  EnumConfig cfg;
  cfg.max_group_order = 32;
  for (auto _ : state) {
    auto found = enumerate_skew_morphisms(g, cfg);
    benchmark::DoNotOptimize(found);
  }
}
BENCHMARK(BM_EnumerateCyclic)->Arg(8)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);

static void BM_EnumerateDihedral(benchmark::State& state) {
  const GroupPtr g = FiniteGroup::dihedral(static_cast<int>(state.range(0)));
  EnumConfig cfg;
  cfg.max_group_order = 32;
  for (auto _ : state) {
    auto found = enumerate_skew_morphisms(g, cfg);
    benchmark::DoNotOptimize(found);
  }
}
BENCHMARK(BM_EnumerateDihedral)->Arg(4)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

static void BM_VerifyFixture(benchmark::State& state) {
  const GroupPtr g = FiniteGroup::cyclic(18);
  // Order-9 non-automorphism on Z_18.
  const std::vector<int> perm =
      parse_cycles("(0)(1,15,17,7,3,5,13,9,11)(2,14,8)(4,10,16)(6)(12)", 18);
  for (auto _ : state) {
    auto res = verify(g, perm);
    benchmark::DoNotOptimize(res);
  }
}
BENCHMARK(BM_VerifyFixture);

static void BM_ClassifySmooth(benchmark::State& state) {
  for (auto _ : state) {
    Catalog c = classify_smooth(static_cast<int>(state.range(0)));
    benchmark::DoNotOptimize(c);
  }
}
BENCHMARK(BM_ClassifySmooth)->Arg(8)->Arg(12)->Arg(24)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
