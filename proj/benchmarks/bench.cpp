#include <benchmark/benchmark.h>

#include "omegacanon/blackwhite.hpp"
#include "omegacanon/colors.hpp"
#include "omegacanon/fixtures.hpp"
#include "omegacanon/periodic.hpp"
#include "omegacanon/persistent.hpp"
#include "omegacanon/wagner.hpp"

using namespace omegacanon;

static void BM_accepts_up(benchmark::State& state) {
  OmegaAutomaton m = fixtures::dma_inf_aa_fin_bb();
  UPWord w(m.structure.alphabet().parse("ba"), m.structure.alphabet().parse("abaab"));
  for (auto _ : state) benchmark::DoNotOptimize(accepts_up(m, w));
}
BENCHMARK(BM_accepts_up);

static void BM_inclusion_measures(benchmark::State& state) {
  OmegaAutomaton m = fixtures::dma_inf_aa_fin_bb();
  for (auto _ : state) benchmark::DoNotOptimize(inclusion_measures(m));
}
BENCHMARK(BM_inclusion_measures);

static void BM_periodic_fdfa(benchmark::State& state) {
  OmegaAutomaton m = fixtures::dma_inf_aa_fin_bb();
  for (auto _ : state) benchmark::DoNotOptimize(periodic_fdfa(m));
}
BENCHMARK(BM_periodic_fdfa);

static void BM_persistent_dfa(benchmark::State& state) {
  Fdfa f = fixtures::fdfa_n_inf_aa_fin_bb();
  for (auto _ : state) benchmark::DoNotOptimize(PersistentDfa(f, 0, Limits{}));
}
BENCHMARK(BM_persistent_dfa);

static void BM_diameter(benchmark::State& state) {
  Fdfa f = fixtures::fdfa_n_inf_aa_fin_bb();
  for (auto _ : state) benchmark::DoNotOptimize(diameter(f));
}
BENCHMARK(BM_diameter);

static void BM_color_context(benchmark::State& state) {
  OmegaAutomaton m = fixtures::dma_inf_aa_fin_bb();
  for (auto _ : state) benchmark::DoNotOptimize(ColorContext::build(m));
}
BENCHMARK(BM_color_context);

static void BM_colorful_fdfa(benchmark::State& state) {
  ColorContext ctx = ColorContext::build(fixtures::dma_inf_aa_fin_bb());
  for (auto _ : state) benchmark::DoNotOptimize(build_colorful_fdfa(ctx));
}
BENCHMARK(BM_colorful_fdfa);

static void BM_c_lector(benchmark::State& state) {
  ColorContext ctx = ColorContext::build(fixtures::dma_inf_aa_fin_bb());
  ColorfulFdfa cf = build_colorful_fdfa(ctx);
  for (auto _ : state) benchmark::DoNotOptimize(build_c_lector(ctx, cf, 1));
}
BENCHMARK(BM_c_lector);

BENCHMARK_MAIN();
