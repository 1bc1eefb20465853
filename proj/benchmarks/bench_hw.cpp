// Closed-form weight vs brute-force expansion, over growing p3.

#include <benchmark/benchmark.h>

#include "cyclo/closedform.hpp"
#include "cyclo/cyclotomic.hpp"

namespace {

void BM_formula(benchmark::State& state) {
  auto p2 = state.range(0);
  auto p3 = state.range(1);
  for (auto _ : state) {
    auto params = cyclo::TernaryParams::create(p2, p3);
    benchmark::DoNotOptimize(cyclo::hw_ternary(params));
  }
}

void BM_oracle(benchmark::State& state) {
  auto p2 = state.range(0);
  auto p3 = state.range(1);
  for (auto _ : state) {
    cyclo::clear_cyclotomic_cache();
    benchmark::DoNotOptimize(cyclo::hw_oracle(3, p2, p3));
  }
}

void BM_binary_expand(benchmark::State& state) {
  auto m = state.range(0);
  auto p = state.range(1);
  for (auto _ : state) {
    cyclo::clear_cyclotomic_cache();
    benchmark::DoNotOptimize(cyclo::binary_expand(m, p));
  }
}

}  // namespace

BENCHMARK(BM_formula)
    ->Args({7, 23})
    ->Args({7, 1913})
    ->Args({283, 84916133});
BENCHMARK(BM_oracle)->Args({7, 23})->Args({7, 1913})->Args({31, 1861});
BENCHMARK(BM_binary_expand)->Args({21, 23})->Args({33, 101})->Args({93, 1861});

BENCHMARK_MAIN();
