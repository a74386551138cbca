#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "slu/ar_group.hpp"
#include "slu/design.hpp"
#include "slu/group.hpp"

namespace slu {

/// D* = {x y^{-1} | x, y in D, x != y} as a sorted list with repetitions.
/// Throws Error{BadBlockSize} unless #D = q+1 and 1 is in D.
std::vector<Point> quotient_set(const SL2& g, std::span<const Point> d);

/// All q(q+1) quotients are distinct.
bool verify_Q(const SL2& g, std::span<const Point> d);

/// S\{1}, the Sylow subgroups minus 1 and all D* partition SL(2,q)\{1}.
bool verify_P(const SL2& g, const Subgroup& s, const std::vector<std::vector<Point>>& d_sets);

/// Affine SL(2,q)-unital: points are the group elements, blocks are the
/// right cosets of S, the short blocks and the right translates of each D.
/// Immutable after construction.
class AffineUnital {
 public:
  static constexpr std::size_t kShort = ~std::size_t{0};

  /// Throws Error{BadBlockSize} or Error{AxiomViolation} (with the first
  /// violating point pair in the message).
  AffineUnital(const SL2& g, Subgroup s, std::vector<std::vector<Point>> d_sets);

  /// Recovers S and the D sets from a block list. Throws Error{AxiomViolation}
  /// if the blocks do not form an affine SL(2,q)-unital.
  static AffineUnital from_design(const SL2& g, const Design& d);

  const SL2& group() const noexcept { return *g_; }
  const Subgroup& s() const noexcept { return s_; }
  const std::vector<std::vector<Point>>& d_sets() const noexcept { return d_sets_; }
  /// Sorted long blocks (size q+1).
  const std::vector<std::vector<Point>>& long_blocks() const noexcept { return long_; }
  std::size_t point_count() const noexcept { return g_->order(); }

  /// Long block through u != v, or kShort if u and v lie on a short block.
  std::size_t long_block_through(Point u, Point v) const noexcept {
    return static_cast<std::size_t>(join_[u * g_->order() + v]);
  }

  /// All blocks, canonically sorted.
  Design design() const;

  bool is_automorphism(const ArGroup& ar, std::size_t alpha, Point h) const;

 private:
  const SL2* g_;
  Subgroup s_;
  std::vector<std::vector<Point>> d_sets_;
  std::vector<std::vector<Point>> long_;
  std::vector<std::int64_t> join_;
};

/// Deterministic cyclic subgroup of the given order: powers of the first
/// element (in point order) of that order. Throws Error{BadMode} if none.
Subgroup cyclic_subgroup(const SL2& g, std::size_t order);
bool is_cyclic(const SL2& g, const Subgroup& s);
/// Subgroups of the given order generated by at most two elements, sorted.
std::vector<Subgroup> subgroups_of_order(const SL2& g, std::size_t order);

struct DSearchOptions {
  /// 0 means unlimited.
  std::uint64_t node_budget = 0;
};

struct DSearchResult {
  /// Each solution lists its q-2 D sets (sorted, each containing 1); each D
  /// is the least of its q+1 translates D d^{-1}, d in D.
  std::vector<std::vector<std::vector<Point>>> solutions;
  /// D sets completed during the search.
  std::size_t candidates = 0;
  std::uint64_t nodes = 0;
  bool complete = true;
};

/// All D-set families completing (S, D) to an affine unital.
DSearchResult search_d_sets(const SL2& g, const Subgroup& s, const DSearchOptions& options = {});

/// Elements of the full semilinear-times-translation group preserving the
/// block set. Throws Error{TooLarge} beyond the enumeration bound.
std::vector<ArElem> aut_affine(const ArGroup& ar, const AffineUnital& u);

/// Isomorphism classes of search solutions.
struct UnitalType {
  std::vector<std::size_t> members;  // solution indices, ascending
  std::size_t representative = 0;    // least member
  std::uint64_t aut_order = 0;
  /// The type with the largest automorphism group is taken as the classical one.
  bool classical = false;
};

/// Groups solutions by images under semilinear maps normalizing S, then
/// merges classes the generic isomorphism test identifies. Types are sorted
/// by descending automorphism order, then representative.
std::vector<UnitalType> classify_unitals(const ArGroup& ar, const Subgroup& s,
                                         const std::vector<std::vector<std::vector<Point>>>& solutions);

}  // namespace slu
