// Microbenchmarks for the hot paths: composition, the power scan on both a
// finite-order and a blowing-up product, window construction, and the oracle.

#include <benchmark/benchmark.h>

#include "ct/gamma.hpp"
#include "ct/oracle.hpp"
#include "ct/survey.hpp"

namespace {

using namespace ct;

ClassTransposition ctp(Int r1, Int m1, Int r2, Int m2) {
  return ClassTransposition(ResidueClass(r1, m1), ResidueClass(r2, m2));
}

void BM_FromClassTransposition(benchmark::State& state) {
  ClassTransposition t = ctp(3, 8, 5, 12);
  for (auto _ : state) benchmark::DoNotOptimize(RcwaMap::from_class_transposition(t));
}
BENCHMARK(BM_FromClassTransposition);

void BM_ComposeSmall(benchmark::State& state) {
  RcwaMap f = RcwaMap::from_class_transposition(ctp(0, 2, 3, 8));
  RcwaMap g = RcwaMap::from_class_transposition(ctp(2, 7, 5, 7));
  for (auto _ : state) benchmark::DoNotOptimize(compose(f, g));
}
BENCHMARK(BM_ComposeSmall);

void BM_PowerScanFinite60(benchmark::State& state) {
  RcwaMap sigma = compose(RcwaMap::from_class_transposition(ctp(1, 6, 0, 8)),
                          RcwaMap::from_class_transposition(ctp(1, 7, 4, 7)));
  for (auto _ : state)
    benchmark::DoNotOptimize(power_order_scan(sigma, 512, 1'000'000));
}
BENCHMARK(BM_PowerScanFinite60);

void BM_PowerScanBlowup(benchmark::State& state) {
  RcwaMap sigma = compose(RcwaMap::from_class_transposition(ctp(0, 2, 3, 8)),
                          RcwaMap::from_class_transposition(ctp(2, 7, 5, 7)));
  for (auto _ : state)
    benchmark::DoNotOptimize(power_order_scan(sigma, 512, 1'000'000));
}
BENCHMARK(BM_PowerScanBlowup);

void BM_GammaWindow(benchmark::State& state) {
  ClassTransposition t1 = ctp(0, 2, 1, 4), t2 = ctp(0, 2, 3, 4);
  for (auto _ : state) {
    GammaGraph g(t1, t2, state.range(0));
    benchmark::DoNotOptimize(g.components());
  }
}
BENCHMARK(BM_GammaWindow)->Arg(200)->Arg(1000);

void BM_Reconstruct(benchmark::State& state) {
  GammaGraph g(ctp(0, 2, 1, 4), ctp(0, 2, 3, 4), 500);
  for (auto _ : state) benchmark::DoNotOptimize(reconstruct_product(g));
}
BENCHMARK(BM_Reconstruct);

void BM_OracleCertified(benchmark::State& state) {
  ClassTransposition t1 = ctp(0, 2, 1, 4), t2 = ctp(0, 2, 3, 4);
  for (auto _ : state) benchmark::DoNotOptimize(order_of_product(t1, t2));
}
BENCHMARK(BM_OracleCertified);

void BM_OracleHeuristic(benchmark::State& state) {
  ClassTransposition t1 = ctp(0, 2, 3, 8), t2 = ctp(2, 7, 5, 7);
  for (auto _ : state) benchmark::DoNotOptimize(order_of_product(t1, t2));
}
BENCHMARK(BM_OracleHeuristic);

void BM_Enumerate(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(enumerate_class_transpositions(state.range(0)));
}
BENCHMARK(BM_Enumerate)->Arg(8)->Arg(12);

}  // namespace

BENCHMARK_MAIN();
