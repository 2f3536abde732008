#include <benchmark/benchmark.h>

#include "oscalg/boxring.hpp"
#include "oscalg/fock.hpp"
#include "oscalg/qseries.hpp"
#include "oscalg/quotlab.hpp"

namespace {

using namespace oscalg;

void BM_goettsche_k3(benchmark::State& state) {
  long order = state.range(0);
  for (auto _ : state) {
    SeriesT s = goettsche_product(betti_k3(), order);
    benchmark::DoNotOptimize(s);
  }
}
BENCHMARK(BM_goettsche_k3)->Arg(6)->Arg(10);

void BM_strata_sum_k3(benchmark::State& state) {
  long order = state.range(0);
  for (auto _ : state) {
    SeriesT s = strata_sum(betti_k3(), order);
    benchmark::DoNotOptimize(s);
  }
}
BENCHMARK(BM_strata_sum_k3)->Arg(6)->Arg(8);

void BM_schur_product(benchmark::State& state) {
  long r = state.range(0);
  long n = r / 2;
  BoxClass a = BoxClass::schur(r, n, Partition({2, 1}));
  BoxClass b = BoxClass::schur(r, n, Partition({1, 1}));
  for (auto _ : state) {
    BoxClass c = a * b;
    benchmark::DoNotOptimize(c);
  }
}
BENCHMARK(BM_schur_product)->Arg(6)->Arg(8);

void BM_character_k3(benchmark::State& state) {
  long order = state.range(0);
  for (auto _ : state) {
    SeriesT s = character(datum_k3(), order);
    benchmark::DoNotOptimize(s);
  }
}
BENCHMARK(BM_character_k3)->Arg(6)->Arg(8);

void BM_relations_plane(benchmark::State& state) {
  long energy = state.range(0);
  SurfaceDatum S = datum_p2();
  for (auto _ : state) {
    RelationReport r = check_relations(S, energy);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_relations_plane)->Arg(3)->Arg(4);

void BM_companion(benchmark::State& state) {
  long half = state.range(0);
  NilpotentPair p = staircase_pair(Partition({half, half}), true, 42);
  for (auto _ : state) {
    Companion c = companion(p);
    benchmark::DoNotOptimize(c);
  }
}
BENCHMARK(BM_companion)->Arg(4)->Arg(6);

}  // namespace

BENCHMARK_MAIN();
