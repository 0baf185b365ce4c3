#include <benchmark/benchmark.h>

#include "astau/airy_fredholm.hpp"
#include "astau/minor_expansion.hpp"
#include "astau/pii_ode.hpp"
#include "astau/symbolic.hpp"
#include "astau/widom.hpp"

using namespace astau;

static void BM_TauAiry(benchmark::State& state) {
  airy::AiryConfig cfg;
  cfg.order = static_cast<int>(state.range(0));
  cfg.estimate_error = false;
  for (auto _ : state) benchmark::DoNotOptimize(airy::tau_airy(0.0, 0.5, cfg).value);
}
BENCHMARK(BM_TauAiry)->Arg(80)->Arg(160)->Arg(320)->Unit(benchmark::kMillisecond);

static void BM_TauWidom(benchmark::State& state) {
  widom::WidomConfig cfg;
  cfg.order = static_cast<int>(state.range(0));
  cfg.estimate_error = false;
  for (auto _ : state) benchmark::DoNotOptimize(widom::tau_widom(0.0, 0.5, cfg).value);
}
BENCHMARK(BM_TauWidom)->Arg(80)->Arg(160)->Arg(320)->Unit(benchmark::kMillisecond);

static void BM_TauMinor(benchmark::State& state) {
  minor::MinorConfig cfg;
  cfg.max_weight = static_cast<int>(state.range(0));
  const auto table = minor::coefficient_table(1.0, 0.25, cfg);
  for (auto _ : state) benchmark::DoNotOptimize(minor::tau_minor(table, cfg.max_weight).value);
}
BENCHMARK(BM_TauMinor)->Arg(4)->Arg(8)->Arg(12)->Unit(benchmark::kMicrosecond);

static void BM_CoefficientTable(benchmark::State& state) {
  minor::MinorConfig cfg;
  cfg.n_cut = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(minor::coefficient_table(1.0, 0.25, cfg).alpha.sum());
}
BENCHMARK(BM_CoefficientTable)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

static void BM_SymbolicCoefficient(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const auto c = sym::coeff_alpha(k, 0, 1);  // warm the cache
  const auto seeds = special::seed_moments(1.0, 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(sym::eval_symfn(c.sym, 1.0, seeds));
}
BENCHMARK(BM_SymbolicCoefficient)->Arg(2)->Arg(8)->Arg(16)->Unit(benchmark::kMicrosecond);

static void BM_SolvePII(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(ode::solve_pii(0.5).u.back());
}
BENCHMARK(BM_SolvePII)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
