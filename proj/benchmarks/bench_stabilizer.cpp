#include <benchmark/benchmark.h>

#include "slu/parallelism.hpp"

namespace {

void BM_StabilizerSquare(benchmark::State& state) {
  const slu::SL2 g(static_cast<unsigned>(state.range(0)), 2);
  const slu::ArGroup ar(g);
  const auto pi = slu::pi_sq(g);
  for (auto _ : state) benchmark::DoNotOptimize(slu::stabilizer(ar, pi).size());
}
BENCHMARK(BM_StabilizerSquare)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_StabilizerOdd(benchmark::State& state) {
  const slu::SL2 g(static_cast<unsigned>(state.range(0)), 1);
  const slu::ArGroup ar(g);
  const auto pi = slu::pi_odd(g);
  for (auto _ : state) benchmark::DoNotOptimize(slu::stabilizer(ar, pi).size());
}
BENCHMARK(BM_StabilizerOdd)->Arg(3)->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);

void BM_Equivalence(benchmark::State& state) {
  const slu::SL2 g(3, 2);
  const slu::ArGroup ar(g);
  const auto a = slu::pi_sq(g), b = slu::invert(g, a);
  for (auto _ : state) benchmark::DoNotOptimize(slu::equivalence(ar, a, b).has_value());
}
BENCHMARK(BM_Equivalence)->Unit(benchmark::kMillisecond);

}  // namespace
