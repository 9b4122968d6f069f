#include <chieuler/chi_eulerian.hpp>
#include <chieuler/eulerian.hpp>
#include <chieuler/lfunction.hpp>
#include <chieuler/padic_verify.hpp>

#include <benchmark/benchmark.h>

using namespace chieuler;

static void BM_EulerianTable(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(eulerian_table(static_cast<unsigned>(state.range(0))));
}
BENCHMARK(BM_EulerianTable)->Arg(10)->Arg(25)->Arg(50);

// Characters mod 9 include order-6 values in Q(zeta_6).
static void BM_ChiEulerian(benchmark::State& state) {
  const auto chars = enumerate_characters(state.range(1));
  const auto& chi = chars.back();
  for (auto _ : state) {
    benchmark::DoNotOptimize(chi_eulerian_table(static_cast<unsigned>(state.range(0)), chi, Rational(7, 2)));
  }
}
BENCHMARK(BM_ChiEulerian)->Args({8, 3})->Args({8, 9})->Args({20, 9})->Args({20, 15});

static void BM_ChiEulerianGeometric(benchmark::State& state) {
  const auto chi = enumerate_characters(state.range(1)).back();
  for (auto _ : state) {
    benchmark::DoNotOptimize(chi_eulerian_geometric(static_cast<unsigned>(state.range(0)), chi, Rational(7, 2)));
  }
}
BENCHMARK(BM_ChiEulerianGeometric)->Args({8, 3})->Args({8, 9});

static void BM_TruncatedIntegral(benchmark::State& state) {
  const auto p = static_cast<std::uint64_t>(state.range(0));
  const auto N = static_cast<unsigned>(state.range(1));
  const IntegrandSpec f{Monomial{4}, 0};
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        truncated_integral(f, p, Rational(static_cast<long>(p + 1)), Measure{MeasureKind::neg_q_inv, 1}, N, 3));
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) * static_cast<std::int64_t>(ipow(p, N)));
}
BENCHMARK(BM_TruncatedIntegral)->Args({3, 6})->Args({5, 6})->Args({7, 6})->Unit(benchmark::kMillisecond);

static void BM_LEulerian(benchmark::State& state) {
  const auto chi = enumerate_characters(5).back();
  const long bits = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(l_eulerian(Rational(-3), 0, chi, Rational(7, 2), bits));
}
BENCHMARK(BM_LEulerian)->Arg(128)->Arg(512)->Unit(benchmark::kMicrosecond);

static void BM_MellinTerm(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(mellin_term_check(Rational(3, 2), 1, 2, state.range(0)));
}
BENCHMARK(BM_MellinTerm)->Arg(128)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
