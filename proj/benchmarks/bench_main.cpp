#include <benchmark/benchmark.h>

#include "divconv/convolution.hpp"
#include "divconv/eta.hpp"
#include "divconv/qseries.hpp"
#include "divconv/representation.hpp"
#include "divconv/spaces.hpp"

using namespace divconv;

static void BM_SeriesMul(benchmark::State& state) {
  const auto T = static_cast<std::size_t>(state.range(0));
  const QSeries L = eisenstein_L(1, T);
  const QSeries M = eisenstein_M(2, T);
  for (auto _ : state) benchmark::DoNotOptimize(L * M);
}
BENCHMARK(BM_SeriesMul)->Arg(100)->Arg(200)->Arg(400)->Unit(benchmark::kMillisecond);

static void BM_EtaQuotientSeries(benchmark::State& state) {
  const EtaQuotient e(40, {{1, 2}, {2, -1}, {4, 2}, {5, 2}, {10, -1}, {20, 2}});
  const auto T = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(eta_quotient_series(e, T));
}
BENCHMARK(BM_EtaQuotientSeries)->Arg(100)->Arg(400)->Unit(benchmark::kMicrosecond);

static void BM_SearchCuspForms(benchmark::State& state) {
  SearchOptions o;
  o.jobs = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(search_cusp_forms(state.range(0), 8, o));
}
BENCHMARK(BM_SearchCuspForms)->Args({33, 1})->Args({40, 1})->Args({40, 4})->Unit(benchmark::kSecond)->Iterations(1);

static void BM_DeriveFormula(benchmark::State& state) {
  const std::int64_t a = state.range(0), b = state.range(1);
  const ModularBasis basis = build_search_basis(a * b, default_working_precision(a * b), SearchOptions{});
  for (auto _ : state) benchmark::DoNotOptimize(derive_formula(a, b, basis));
}
BENCHMARK(BM_DeriveFormula)->Args({1, 10})->Args({1, 33})->Unit(benchmark::kMillisecond);

static void BM_BruteForceW(benchmark::State& state) {
  const std::int64_t n = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_W(3, 8, n));
}
BENCHMARK(BM_BruteForceW)->Arg(200)->Arg(2000)->Unit(benchmark::kMicrosecond);

static void BM_RepOracle(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(rep_oracle(Form::Hex, 1, 11, 200));
}
BENCHMARK(BM_RepOracle);
BENCHMARK_MAIN();
