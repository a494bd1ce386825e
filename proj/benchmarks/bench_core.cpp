#include <benchmark/benchmark.h>

#include "endobrace/brace.hpp"
#include "endobrace/morphisms.hpp"
#include "endobrace/regular.hpp"
#include "endobrace/ybe.hpp"
#include "endobrace/zoo.hpp"

using namespace endobrace;

static void BM_SubgroupOracle(benchmark::State& state) {
  auto g = build_dihedral(static_cast<int>(state.range(0)));
  RegularFamily f(g, identity_map(g), -1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(oracle_is_subgroup(f));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SubgroupOracle)->Arg(8)->Arg(16)->Arg(32)->Arg(64)->Complexity();

static void BM_BraceFromFamily(benchmark::State& state) {
  auto g = build_dihedral(static_cast<int>(state.range(0)));
  RegularFamily f(g, identity_map(g), -1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(brace_from_family(f));
  }
}
BENCHMARK(BM_BraceFromFamily)->Arg(8)->Arg(32)->Arg(64);

static void BM_BraidCheck(benchmark::State& state) {
  auto g = build_dihedral(static_cast<int>(state.range(0)));
  RegularFamily f(g, identity_map(g), -1);
  auto s = build_solution(f, Variant::rG);
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify_braid(s));
  }
}
BENCHMARK(BM_BraidCheck)->Arg(8)->Arg(16);

static void BM_EnumerateEndos(benchmark::State& state) {
  auto g = build_dihedral(static_cast<int>(state.range(0)));
  auto gens = find_generating_set(*g, 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_endomorphisms(g, *gens));
  }
}
BENCHMARK(BM_EnumerateEndos)->Arg(8)->Arg(16);

static void BM_Classify(benchmark::State& state) {
  auto ex = paper_example("ex-neg-proj");
  for (auto _ : state) {
    benchmark::DoNotOptimize(classify(ex.group, ex.psi));
  }
}
BENCHMARK(BM_Classify);

BENCHMARK_MAIN();
