#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "slu/field.hpp"

namespace slu {

/// Dense index of an element of SL(2,q); the point set of every unital here.
using Point = std::uint32_t;
/// Index into the sorted universe of short blocks.
using BlockId = std::uint32_t;

/// 2x2 matrix (a b / c d) over a Field.
struct Mat2 {
  FieldElem a, b, c, d;

  friend constexpr auto operator<=>(const Mat2&, const Mat2&) = default;
};

/// Matrix arithmetic bound to one field.
class MatOps {
 public:
  explicit MatOps(const Field& f) : f_(&f) {}

  Mat2 identity() const noexcept { return {f_->one(), f_->zero(), f_->zero(), f_->one()}; }
  Mat2 mul(const Mat2& x, const Mat2& y) const noexcept;
  FieldElem det(const Mat2& x) const noexcept;
  /// Throws Error{DivisionByZero} for singular matrices.
  Mat2 inverse(const Mat2& x) const;
  Mat2 scale(const Mat2& x, FieldElem s) const noexcept;
  Mat2 frobenius(const Mat2& x, long long l) const noexcept;
  Mat2 bar(const Mat2& x) const;
  /// Representative of the projective class: first nonzero of (a,b,c,d) scaled to 1.
  Mat2 projective_normal(const Mat2& x) const;
  /// a^{-1} x a
  Mat2 conjugate(const Mat2& x, const Mat2& a) const { return mul(mul(inverse(a), x), a); }

  const Field& field() const noexcept { return *f_; }

 private:
  const Field* f_;
};

/// Sorted member list of a subgroup of SL(2,q).
struct Subgroup {
  std::vector<Point> members;

  std::size_t order() const noexcept { return members.size(); }
  bool contains(Point x) const;

  friend bool operator==(const Subgroup&, const Subgroup&) = default;
};

enum class Side { Right, Left };

/// SL(2,q) as an indexed point set with its multiplication, its Sylow
/// p-subgroups, and the universe of short blocks (right cosets of Sylow
/// subgroups).
///
/// Elements are sorted by their code tuple (a,b,c,d); `one()` records the
/// identity's index. Sylow subgroups: index 0 is the upper unitriangular
/// group, the others follow sorted by member lists. Short blocks are sorted
/// lexicographically by point list, so a BlockId is stable across runs.
class SL2 {
 public:
  static constexpr std::size_t kMaxOrder = 100000;
  static constexpr BlockId kNoBlock = ~BlockId{0};

  /// Throws Error{NotPrime} / Error{TooLarge}.
  SL2(unsigned p, unsigned e);

  SL2(const SL2&) = delete;
  SL2& operator=(const SL2&) = delete;

  const Field& field() const noexcept { return field_; }
  const MatOps& ops() const noexcept { return ops_; }
  std::uint32_t q() const noexcept { return field_.q(); }
  std::size_t order() const noexcept { return elems_.size(); }

  const Mat2& elem(Point x) const noexcept { return elems_[x]; }
  std::optional<Point> find(const Mat2& m) const noexcept;
  /// Throws Error{BadMode} if m is not in SL(2,q).
  Point index(const Mat2& m) const;

  Point one() const noexcept { return one_; }
  Point minus_one() const noexcept { return minus_one_; }
  Point mul(Point x, Point y) const noexcept;
  Point inv(Point x) const noexcept { return inv_[x]; }
  /// h^{-1} x h
  Point conj(Point x, Point h) const noexcept { return mul(mul(inv_[h], x), h); }

  /// Element order in the group.
  std::size_t element_order(Point x) const noexcept;

  const std::vector<Subgroup>& sylows() const noexcept { return sylows_; }
  /// Sylow subgroup containing a nontrivial unipotent element, or -1.
  int sylow_of(Point x) const noexcept { return sylow_of_[x]; }
  /// Sylow id of the subgroup with the given members, or -1.
  int sylow_id(const Subgroup& s) const;

  /// Normalizer of a subgroup inside SL(2,q), by direct test.
  Subgroup normalizer(const Subgroup& s) const;
  /// Projective classes of GL(2,q) normalizing s, as normalized representatives.
  std::vector<Mat2> normalizer_projective(const Subgroup& s) const;

  std::vector<Point> coset(const Subgroup& s, Point g, Side side) const;

  // Short blocks.
  std::size_t block_count() const noexcept { return blocks_.size(); }
  const std::vector<Point>& block_points(BlockId b) const noexcept { return blocks_[b]; }
  /// Block P g for Sylow P.
  BlockId right_coset(std::size_t sylow, Point g) const noexcept {
    return right_[sylow * order() + g];
  }
  /// Block g P for Sylow P.
  BlockId left_coset(std::size_t sylow, Point g) const noexcept {
    return left_[sylow * order() + g];
  }
  /// Short block through two distinct points, or kNoBlock.
  BlockId block_through(Point u, Point v) const noexcept;
  std::optional<BlockId> find_block(std::span<const Point> points) const;
  /// The Sylow P with block = P g.
  std::size_t block_right_sylow(BlockId b) const noexcept;
  /// The Sylow Q with block = g Q.
  std::size_t block_left_sylow(BlockId b) const noexcept;

  /// Pointwise image of a block under a point map, as a block id.
  template <class Map>
  BlockId map_block(BlockId b, Map&& f) const {
    const auto& pts = blocks_[b];
    return block_through(f(pts[0]), f(pts[1]));
  }

 private:
  Field field_;
  MatOps ops_;
  std::vector<Mat2> elems_;
  std::vector<std::int32_t> lookup_;  // dense over q^4 codes
  std::vector<Point> inv_;
  std::vector<Point> mul_;  // dense table when small
  Point one_ = 0;
  Point minus_one_ = 0;

  std::vector<Subgroup> sylows_;
  std::vector<int> sylow_of_;

  std::vector<std::vector<Point>> blocks_;
  std::vector<BlockId> right_;
  std::vector<BlockId> left_;

  std::size_t key(const Mat2& m) const noexcept;
  void build_sylows();
  void build_blocks();
};

}  // namespace slu
