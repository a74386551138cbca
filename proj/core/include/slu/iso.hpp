#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "slu/design.hpp"
#include "slu/perm_group.hpp"

namespace slu {

/// Optional vertex colors; empty vectors mean a single color. Automorphisms
/// and isomorphisms must preserve colors.
struct Coloring {
  std::vector<std::uint32_t> points;
  std::vector<std::uint32_t> blocks;
};

struct AutomorphismResult {
  /// Point permutations, each verified to preserve blocks and colors.
  std::vector<Perm> generators;
  std::uint64_t order = 1;
  /// canonical_labeling[x] = canonical label of point x.
  Perm canonical_labeling;
  /// Relabeled blocks, each sorted, list sorted.
  std::vector<std::vector<std::uint32_t>> canonical_blocks;
  std::uint64_t nodes = 0;
};

/// Points above this bound are rejected with Error{TooLarge}.
inline constexpr std::size_t kMaxIsoPoints = 1000;

/// Per point, the number of O'Nan configurations through it: four blocks
/// meeting pairwise in six distinct points. Empty if some point pair lies on
/// two blocks or the count would exceed kMaxOnanWork steps. Automorphism
/// search uses it to split the initial point coloring.
std::vector<std::uint64_t> onan_counts(const Design& d);
inline constexpr std::uint64_t kMaxOnanWork = 400'000'000;

/// Stable ordered partition of the incidence graph (points first, then
/// blocks). Returns the cell index of every vertex, cells numbered in order.
std::vector<std::uint32_t> refine(const Design& d, const Coloring& c = {});

/// Full automorphism group and canonical form.
AutomorphismResult automorphisms(const Design& d, const Coloring& c = {});

/// Point bijection a -> b mapping blocks to blocks (and colors to colors).
std::optional<Perm> isomorphism(const Design& a, const Design& b, const Coloring& ca = {},
                                const Coloring& cb = {});
bool isomorphic(const Design& a, const Design& b);

/// Induced block permutation; throws Error{AxiomViolation} if p is not an
/// automorphism.
std::vector<std::uint32_t> block_permutation(const Design& d, const Perm& p);

/// True iff every automorphism maps block `b` to itself.
bool block_stabilizer_check(const Design& d, std::size_t b);

}  // namespace slu
