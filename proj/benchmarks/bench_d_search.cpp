#include <benchmark/benchmark.h>

#include "slu/unital.hpp"

namespace {

void BM_DSearch(benchmark::State& state) {
  const slu::SL2 g(static_cast<unsigned>(state.range(0)), static_cast<unsigned>(state.range(1)));
  const auto s = slu::cyclic_subgroup(g, g.q() + 1);
  for (auto _ : state) benchmark::DoNotOptimize(slu::search_d_sets(g, s).solutions.size());
}
BENCHMARK(BM_DSearch)->Args({3, 1})->Args({2, 2})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DSearch)->Args({5, 1})->Iterations(1)->Unit(benchmark::kSecond);

}  // namespace
