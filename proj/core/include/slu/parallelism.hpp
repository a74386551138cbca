#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "slu/ar_group.hpp"
#include "slu/exact_cover.hpp"
#include "slu/group.hpp"

namespace slu {

/// Partition of the short blocks into classes, stored as a class label per
/// block. Canonical: class i is the class whose least block id is the i-th
/// smallest, so equal partitions compare equal.
class Parallelism {
 public:
  Parallelism() = default;

  /// Relabels arbitrary class labels canonically.
  static Parallelism from_labels(std::span<const std::uint32_t> labels);
  /// Every block must occur in exactly one class (unchecked beyond that).
  static Parallelism from_classes(std::size_t block_count,
                                  const std::vector<std::vector<BlockId>>& classes);

  std::size_t block_count() const noexcept { return class_of_.size(); }
  std::size_t class_count() const noexcept { return classes_; }
  std::uint32_t class_of(BlockId b) const noexcept { return class_of_[b]; }
  const std::vector<std::uint32_t>& labels() const noexcept { return class_of_; }
  /// Blocks of each class, ascending.
  std::vector<std::vector<BlockId>> classes() const;

  friend auto operator<=>(const Parallelism&, const Parallelism&) = default;

 private:
  std::vector<std::uint32_t> class_of_;
  std::size_t classes_ = 0;
};

/// Outcome of a parallelism check. On failure `witness` holds the offending
/// blocks (and `point` the shared point when two blocks meet).
struct ParallelismReport {
  bool ok = true;
  std::string violation;
  std::vector<BlockId> witness;
  std::optional<Point> point;
};

ParallelismReport verify_parallelism(const SL2& g, const std::vector<std::vector<BlockId>>& classes);
ParallelismReport verify_parallelism(const SL2& g, const Parallelism& pi);

Parallelism flat(const SL2& g);
Parallelism natural(const SL2& g);

enum class OmegaMode { Odd, Square };

/// Membership flags over points. Odd: lower-left entry is a square (0
/// included). Square: lower-left entry lies in the index-2 subfield.
/// Throws Error{BadMode} when the field does not support the mode.
std::vector<char> omega(const SL2& g, OmegaMode mode);

/// The class A (or A' when primed) as sorted block ids.
std::vector<BlockId> omega_class(const SL2& g, OmegaMode mode, bool primed);

/// Throws Error{EvenOrder}.
Parallelism pi_odd(const SL2& g, bool primed = false);
/// Throws Error{NotSquareOrder}.
Parallelism pi_sq(const SL2& g);
/// Maps every block through x -> x^{-1}.
Parallelism invert(const SL2& g, const Parallelism& pi);

/// Image of pi under (alpha, h).
Parallelism image(const ArGroup& ar, const Parallelism& pi, std::size_t alpha, Point h);
Parallelism image(const ArGroup& ar, const Parallelism& pi, const ArElem& t);
/// True iff pi . (alpha, h) = target.
bool maps_to(const ArGroup& ar, const Parallelism& pi, const Parallelism& target,
             std::size_t alpha, Point h);

/// Sylow id of the subgroup block lying in class c.
std::size_t class_sylow(const SL2& g, const Parallelism& pi, std::size_t c);

struct EnumerationOptions {
  std::uint64_t node_budget = 0;  // per phase; 0 = unlimited
  unsigned threads = 0;           // 0 reads UNITAL_THREADS
};

struct EnumerationResult {
  std::vector<Parallelism> parallelisms;  // sorted
  std::size_t spread_count = 0;
  std::uint64_t nodes = 0;
  bool complete = true;
};

/// Spreads first (exact cover of points by blocks), then exact cover of the
/// blocks by spreads. No symmetry reduction.
EnumerationResult enumerate_parallelisms(const SL2& g, const EnumerationOptions& options = {});

/// All spreads as sorted block lists.
std::vector<std::vector<BlockId>> enumerate_spreads(const SL2& g, const EnumerationOptions& options,
                                                    bool* complete = nullptr);

/// Brute-force stabilizer of pi in the full group.
std::vector<ArElem> stabilizer(const ArGroup& ar, const Parallelism& pi);
/// An element mapping a to b, if any (brute force).
std::optional<ArElem> equivalence(const ArGroup& ar, const Parallelism& a, const Parallelism& b);

/// A small generating set of the full group.
std::vector<ArElem> ar_generators(const ArGroup& ar);
/// Orbit of pi under the group generated by gens (breadth-first, sorted).
std::vector<Parallelism> orbit(const ArGroup& ar, const Parallelism& pi, std::span<const ArElem> gens);

/// Orbits of `group` on `items`; the set must be closed under the action.
/// Each orbit lists indices into items, ascending; orbits ordered by least
/// index. Throws Error{InvalidParallelism} if an image is missing.
std::vector<std::vector<std::size_t>> parallelism_orbits(const ArGroup& ar,
                                                         std::span<const Parallelism> items,
                                                         std::span<const ArElem> group);

/// Per-class coset census.
struct ClassCensus {
  std::size_t sylow = 0;  // label of the class
  /// right_left[(r, l)]: blocks that are right cosets of Sylow r and left cosets of Sylow l.
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> right_left;

  std::size_t right_of(std::size_t s) const;
  std::size_t left_of(std::size_t s) const;
  std::size_t both(std::size_t r, std::size_t l) const;
};

std::vector<ClassCensus> class_structure_report(const SL2& g, const Parallelism& pi);

/// The Sylow subgroup obtained by applying bar entrywise to Sylow s.
std::size_t bar_sylow(const SL2& g, std::size_t s);

}  // namespace slu
