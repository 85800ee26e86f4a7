#include <benchmark/benchmark.h>

#include "stablecoh/intpoly.hpp"
#include "stablecoh/schubert.hpp"
#include "stablecoh/stablering.hpp"
#include "stablecoh/vassiliev.hpp"
#include "stablecoh/verify.hpp"

using namespace stablecoh;

static void BM_GaussianBinomial(benchmark::State& state) {
  int m = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gaussian_binomial(m, m / 2));
}
BENCHMARK(BM_GaussianBinomial)->Arg(12)->Arg(16)->Arg(24);

static void BM_GrassmannianEnumeration(benchmark::State& state) {
  int m = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(grassmannian_poincare(m / 2, m));
}
BENCHMARK(BM_GrassmannianEnumeration)->Arg(10)->Arg(14);

static void BM_TotalBettiSum(benchmark::State& state) {
  int m = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(total_betti_sum(m));
}
BENCHMARK(BM_TotalBettiSum)->Arg(12)->Arg(16);

static void BM_SeriesInverse(benchmark::State& state) {
  IntPoly denom = IntPoly::from_terms({{0, 1}, {5, 1}});
  for (auto _ : state)
    benchmark::DoNotOptimize(series_inverse(denom, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_SeriesInverse)->Arg(64)->Arg(512);

static void BM_FirstPage(benchmark::State& state) {
  int d = static_cast<int>(state.range(0)), n = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(build_e1_page(d, n, PageVariant::full));
}
BENCHMARK(BM_FirstPage)->Args({13, 3})->Args({17, 4})->Args({25, 6});

static void BM_DiagonalSweep(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  for (auto _ : state)
    for (int k = 0; k <= (2 * n + 1) * (n + 1); ++k)
      benchmark::DoNotOptimize(diagonal_sum(n, k, PageVariant::full));
}
BENCHMARK(BM_DiagonalSweep)->Arg(3)->Arg(5)->Arg(7);

static void BM_BasisEnumeration(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  GradedRingPresentation pres = ring_presentation(Space::Xstar, 4 * n + 1, n);
  for (auto _ : state)
    benchmark::DoNotOptimize(enumerate_basis(pres, 3 * n));
}
BENCHMARK(BM_BasisEnumeration)->Arg(4)->Arg(8);

static void BM_SerreSurvivors(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(serre_einfty(n));
}
BENCHMARK(BM_SerreSurvivors)->Arg(3)->Arg(6);

static void BM_VerifyAll(benchmark::State& state) {
  VerifyOptions opts;
  opts.nmax = static_cast<int>(state.range(0));
  opts.dmax = static_cast<int>(state.range(1));
  opts.threads = 1;  // measure the single-threaded sweep
  for (auto _ : state) benchmark::DoNotOptimize(verify_all(opts));
}
BENCHMARK(BM_VerifyAll)->Args({2, 9})->Args({4, 17});

BENCHMARK_MAIN();
