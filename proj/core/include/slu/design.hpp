#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace slu {

/// Incidence structure on points 0..v-1. Blocks are sorted point lists.
/// Points from `infinite_from` on are points at infinity of a closure (none
/// when infinite_from == v).
struct Design {
  std::uint32_t v = 0;
  std::vector<std::vector<std::uint32_t>> blocks;
  std::uint32_t infinite_from = 0;

  /// Sorts each block and the block list.
  void canonicalize();
  std::size_t block_count() const noexcept { return blocks.size(); }

  friend bool operator==(const Design&, const Design&) = default;
};

/// Result of an axiom check; `witness` names the first violating points or
/// blocks in index order.
struct DesignReport {
  bool ok = true;
  std::string violation;
  std::vector<std::uint32_t> witness;
};

/// 2-(n^3+1, n+1, 1) design check.
DesignReport verify_design(const Design& d, unsigned n);

/// Affine unital axioms on point count, block sizes, point degrees and
/// unique joining blocks (the parallelism axiom is checked separately).
DesignReport verify_affine_axioms(const Design& d, unsigned q);

/// Blocks through each point, as block indices.
std::vector<std::vector<std::uint32_t>> point_blocks(const Design& d);

}  // namespace slu
