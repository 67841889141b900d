#include <benchmark/benchmark.h>

#include "sgm/catalog.hpp"
#include "sgm/negami.hpp"
#include "sgm/recognize.hpp"

using namespace sgm;

static void BM_RankR16(benchmark::State& state) {
  const BinaryMatroid m = r16();
  const Gf2Matrix rep = m.representation();
  for (auto _ : state) benchmark::DoNotOptimize(rank(rep));
}
BENCHMARK(BM_RankR16);

static void BM_CircuitsK35Dual(benchmark::State& state) {
  const BinaryMatroid m = bond_matroid(complete_bipartite(3, 5));
  for (auto _ : state) benchmark::DoNotOptimize(circuits(m));
}
BENCHMARK(BM_CircuitsK35Dual);

static void BM_HasMinorK33InK35Dual(benchmark::State& state) {
  const BinaryMatroid host = bond_matroid(complete_bipartite(3, 5));
  for (auto _ : state) benchmark::DoNotOptimize(has_minor(host, bond_k33()));
}
BENCHMARK(BM_HasMinorK33InK35Dual);

static void BM_HasMinorAbsent(benchmark::State& state) {
  // Planar host: the search must exhaust every contraction set.
  const BinaryMatroid host = bond_matroid(cube());
  for (auto _ : state) benchmark::DoNotOptimize(has_minor(host, bond_k5()));
}
BENCHMARK(BM_HasMinorAbsent);

static void BM_Lemma31(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(verify_lemma31());
}
BENCHMARK(BM_Lemma31)->Unit(benchmark::kMillisecond);

static void BM_Thm34(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(verify_thm34());
}
BENCHMARK(BM_Thm34)->Unit(benchmark::kMillisecond);

static void BM_NegamiClosure(benchmark::State& state) {
  const Multigraph seed = complete_bipartite(3, 5);
  const auto max_edges = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(negami_closure(seed, max_edges));
}
BENCHMARK(BM_NegamiClosure)->DenseRange(16, 18)->Unit(benchmark::kMillisecond);

static void BM_RecognizeK35Dual(benchmark::State& state) {
  const BinaryMatroid m = bond_matroid(complete_bipartite(3, 5));
  for (auto _ : state) benchmark::DoNotOptimize(recognize_cographic(m));
}
BENCHMARK(BM_RecognizeK35Dual)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
