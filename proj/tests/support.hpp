#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <random>
#include <utility>
#include <vector>

#include "slu/ar_group.hpp"
#include "slu/group.hpp"
#include "slu/unital.hpp"

namespace slu::test {

/// Group tables, the cyclic S, the D-set search and one unital per type.
/// Built once per (p, e) and shared by every test in the binary.
struct Context {
  std::unique_ptr<SL2> g;
  std::unique_ptr<ArGroup> ar;
  Subgroup s;
  DSearchResult search;
  std::vector<UnitalType> types;
  std::vector<AffineUnital> unitals;  // representatives, classical first
};

inline const Context& context(unsigned p, unsigned e) {
  static std::map<std::pair<unsigned, unsigned>, std::unique_ptr<Context>> cache;
  auto& slot = cache[{p, e}];
  if (!slot) {
    auto c = std::make_unique<Context>();
    c->g = std::make_unique<SL2>(p, e);
    c->ar = std::make_unique<ArGroup>(*c->g);
    c->s = cyclic_subgroup(*c->g, c->g->q() + 1);
    c->search = search_d_sets(*c->g, c->s);
    c->types = classify_unitals(*c->ar, c->s, c->search.solutions);
    for (const auto& t : c->types) c->unitals.emplace_back(*c->g, c->s, c->search.solutions[t.representative]);
    slot = std::move(c);
  }
  return *slot;
}

/// Fixed-seed generator so failures reproduce.
inline std::mt19937_64& rng() {
  static std::mt19937_64 r(0x5eed);
  return r;
}

inline std::size_t pick(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng()); }

}  // namespace slu::test
