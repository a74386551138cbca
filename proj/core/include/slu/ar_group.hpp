#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "slu/group.hpp"

namespace slu {

/// Element of the group of semilinear automorphisms of SL(2,q) combined with
/// right translations. Acting on the right:
///
///   x . (mat, frob, rmul) = phi^frob(mat^{-1} x mat) * rmul
///
/// `mat` is a projective representative (first nonzero entry 1), `frob` is
/// reduced mod e, and `rmul` is an element of SL(2,q). This normal form is
/// unique, so equality of ArElem is equality of group elements.
struct ArElem {
  Mat2 mat;
  std::uint32_t frob = 0;
  Point rmul = 0;

  friend constexpr auto operator<=>(const ArElem&, const ArElem&) = default;
};

/// The full group PGammaL(2,q) x| SL(2,q) over one SL2 table, with the point
/// permutation of every semilinear part precomputed.
class ArGroup {
 public:
  /// Upper bound for materialized element lists (enumerate()).
  static constexpr std::size_t kMaxEnumerate = 200000;

  explicit ArGroup(const SL2& group);

  const SL2& group() const noexcept { return *g_; }

  /// Number of semilinear parts, #PGL(2,q) * e.
  std::size_t semilinear_count() const noexcept { return mats_.size() * e_; }
  std::size_t order() const noexcept { return semilinear_count() * g_->order(); }

  const Mat2& semilinear_mat(std::size_t alpha) const noexcept { return mats_[alpha / e_]; }
  std::uint32_t semilinear_frob(std::size_t alpha) const noexcept {
    return static_cast<std::uint32_t>(alpha % e_);
  }
  /// Index of the semilinear part (mat, frob); mat need not be normalized.
  std::size_t semilinear_index(const Mat2& mat, std::uint32_t frob) const;
  std::span<const Point> semilinear_perm(std::size_t alpha) const noexcept {
    return {perms_.data() + alpha * g_->order(), g_->order()};
  }
  /// Image of Sylow subgroup `s` under semilinear part alpha.
  std::size_t semilinear_sylow(std::size_t alpha, std::size_t s) const noexcept {
    return sylow_img_[alpha * g_->sylows().size() + s];
  }

  ArElem element(std::size_t alpha, Point h) const noexcept;
  std::size_t alpha_of(const ArElem& t) const { return semilinear_index(t.mat, t.frob); }

  ArElem identity() const noexcept;
  ArElem gamma(const Mat2& a) const;
  ArElem rho(Point h) const noexcept;
  ArElem frobenius(std::uint32_t l) const noexcept;
  /// x -> h^{-1} x bar(h), written as gamma_h rho_{h^{-1} bar(h)}.
  /// Throws Error{NotSquareOrder} when the field has odd degree.
  ArElem theta(Point h) const;

  /// s then t.
  ArElem compose(const ArElem& s, const ArElem& t) const;
  ArElem inverse(const ArElem& t) const;

  Point apply(const ArElem& t, Point x) const;
  Point apply(std::size_t alpha, Point h, Point x) const noexcept {
    return g_->mul(perms_[alpha * g_->order() + x], h);
  }
  BlockId apply_block(const ArElem& t, BlockId b) const;
  BlockId apply_block(std::size_t alpha, Point h, BlockId b) const noexcept;
  std::vector<Point> permutation(const ArElem& t) const;

  /// Calls f(alpha, h) for every element, in (alpha, h) order.
  template <class F>
  void for_each(F&& f) const {
    const std::size_t n = g_->order();
    for (std::size_t alpha = 0; alpha < semilinear_count(); ++alpha)
      for (Point h = 0; h < n; ++h) f(alpha, h);
  }
  /// Throws Error{TooLarge} above kMaxEnumerate.
  std::vector<ArElem> enumerate() const;

 private:
  const SL2* g_;
  std::size_t e_;
  std::vector<Mat2> mats_;
  std::vector<std::int32_t> mat_lookup_;
  std::vector<Point> perms_;
  std::vector<std::uint32_t> sylow_img_;

  std::size_t mat_key(const Mat2& m) const noexcept;
};

/// h^{-1} x bar(h) on SL(2,q^2); throws Error{NotSquareOrder}.
Point theta_apply(const SL2& g, Point h, Point x);

}  // namespace slu
