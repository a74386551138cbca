#include <benchmark/benchmark.h>

#include <memory>

#include "slu/closure.hpp"
#include "slu/iso.hpp"
#include "slu/unital.hpp"

namespace {

struct Fixture {
  explicit Fixture(unsigned p, unsigned e) : g(p, e), ar(g), s(slu::cyclic_subgroup(g, g.q() + 1)) {
    const auto search = slu::search_d_sets(g, s);
    u = std::make_unique<slu::AffineUnital>(g, s, search.solutions.front());
  }
  slu::SL2 g;
  slu::ArGroup ar;
  slu::Subgroup s;
  std::unique_ptr<slu::AffineUnital> u;
};

void BM_ClosureAutomorphisms(benchmark::State& state) {
  const Fixture f(static_cast<unsigned>(state.range(0)), static_cast<unsigned>(state.range(1)));
  const auto d = slu::close(*f.u, state.range(2) ? slu::natural(f.g) : slu::flat(f.g));
  for (auto _ : state) benchmark::DoNotOptimize(slu::automorphisms(d).order);
}
BENCHMARK(BM_ClosureAutomorphisms)->Args({3, 1, 0})->Args({3, 1, 1})->Args({2, 2, 0})->Args({2, 2, 1})
    ->Unit(benchmark::kMillisecond);

void BM_AffineAutomorphisms(benchmark::State& state) {
  const Fixture f(static_cast<unsigned>(state.range(0)), static_cast<unsigned>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(slu::aut_affine(f.ar, *f.u).size());
}
BENCHMARK(BM_AffineAutomorphisms)->Args({3, 1})->Args({2, 2})->Unit(benchmark::kMillisecond);

}  // namespace
