// Microbenchmarks for the hot paths: exact spectra, the rational simplex,
// the exact-search simulation, and the coloring search.

#include <benchmark/benchmark.h>

#include "xcc/graphs.hpp"
#include "xcc/krawtchouk.hpp"
#include "xcc/linopt.hpp"
#include "xcc/orthrep.hpp"
#include "xcc/protocols.hpp"
#include "xcc/qsim.hpp"

using namespace xcc;

static void BM_Spectrum(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(spectrum(n, n / 2));
}
BENCHMARK(BM_Spectrum)->Arg(8)->Arg(16)->Arg(24)->Arg(32);

static void BM_OrthogonalityDefect(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(orthogonality_defect(n));
}
BENCHMARK(BM_OrthogonalityDefect)->Arg(8)->Arg(16)->Arg(20);

static void BM_DelsarteLp(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(delsarte_theta_prime(n));
}
BENCHMARK(BM_DelsarteLp)->Arg(8)->Arg(16)->Arg(32);

static void BM_GroverParams(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(exact_grover_params(n, 2));
}
BENCHMARK(BM_GroverParams)->Arg(16)->Arg(32);

static void BM_EqTwoRound(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Word w = (Word{1} << (n / 4)) - 1;
  for (auto _ : state) benchmark::DoNotOptimize(eq_two_round(0, w, n));
}
BENCHMARK(BM_EqTwoRound)->Arg(8)->Arg(16);

static void BM_GkPolyRep(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gk_poly_rep(n));
}
BENCHMARK(BM_GkPolyRep)->Arg(8)->Arg(12)->Arg(16);

static void BM_ChromaticGadget(benchmark::State& state) {
  Graph g(5);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(2, 3);
  g.add_edge(3, 4);
  g.add_edge(4, 0);
  const Graph gg = gadget_graph(g);
  for (auto _ : state) benchmark::DoNotOptimize(chromatic_number(gg));
}
BENCHMARK(BM_ChromaticGadget);

BENCHMARK_MAIN();
