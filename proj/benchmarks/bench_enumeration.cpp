#include <benchmark/benchmark.h>

#include "slu/parallelism.hpp"

namespace {

void BM_Spreads(benchmark::State& state) {
  const slu::SL2 g(static_cast<unsigned>(state.range(0)), static_cast<unsigned>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(slu::enumerate_spreads(g, {0, 1}).size());
}
BENCHMARK(BM_Spreads)->Args({3, 1})->Args({2, 2})->Args({5, 1})->Unit(benchmark::kMillisecond);

void BM_Parallelisms(benchmark::State& state) {
  const slu::SL2 g(static_cast<unsigned>(state.range(0)), static_cast<unsigned>(state.range(1)));
  const auto threads = static_cast<unsigned>(state.range(2));
  for (auto _ : state) benchmark::DoNotOptimize(slu::enumerate_parallelisms(g, {0, threads}).parallelisms.size());
}
BENCHMARK(BM_Parallelisms)->Args({3, 1, 1})->Args({2, 2, 1})->Args({2, 2, 4})->Args({5, 1, 4})->Unit(benchmark::kMillisecond);

}  // namespace
