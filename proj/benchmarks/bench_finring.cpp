#include <benchmark/benchmark.h>

#include "finring/catalogue.hpp"
#include "finring/construct.hpp"
#include "finring/star.hpp"

using namespace finring;

static void BM_MakeGF256(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(make_gf(2, 8));
}
BENCHMARK(BM_MakeGF256);

static void BM_VerifyAxioms(benchmark::State& state) {
  FiniteRing r = make_zmod(int(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(verify_ring_axioms(r));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_VerifyAxioms)->Arg(16)->Arg(64)->Arg(256)->Complexity();

static void BM_AllIdeals(benchmark::State& state) {
  FiniteRing r = make_zmod(int(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(all_ideals(r));
}
BENCHMARK(BM_AllIdeals)->Arg(12)->Arg(60);

static void BM_Subfields(benchmark::State& state) {
  FiniteRing r = make_gf(2, 6);
  for (auto _ : state) benchmark::DoNotOptimize(subfields(r));
}
BENCHMARK(BM_Subfields);

static void BM_CheckStar(benchmark::State& state) {
  FiniteRing kappa = make_gf(5, 1);
  FiniteRing r = algebra_sdprod(kappa, kappa, identity_hom(kappa));
  for (auto _ : state) benchmark::DoNotOptimize(check_star_decomposition(r));
}
BENCHMARK(BM_CheckStar);

static void BM_EnumerateActionPairs(benchmark::State& state) {
  FiniteRing b = make_gf(3, 2);
  FiniteRing s = make_gf(3, 1);
  for (auto _ : state)
    benchmark::DoNotOptimize(enumerate_action_pairs(b, s));
}
BENCHMARK(BM_EnumerateActionPairs);

static void BM_VerifyCatalogue(benchmark::State& state) {
  auto entries = default_catalogue();
  for (auto _ : state) benchmark::DoNotOptimize(verify_catalogue(entries));
}
BENCHMARK(BM_VerifyCatalogue);

BENCHMARK_MAIN();
