#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace slu {

/// Fixed-width dynamic bit set over point or block indices.
class BitSet {
 public:
  BitSet() = default;
  explicit BitSet(std::size_t width) : width_(width), words_((width + 63) / 64, 0) {}

  std::size_t width() const noexcept { return width_; }

  void set(std::size_t i) noexcept { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) noexcept { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool test(std::size_t i) const noexcept { return (words_[i >> 6] >> (i & 63)) & 1u; }

  std::size_t count() const noexcept {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool none() const noexcept {
    for (auto w : words_)
      if (w) return false;
    return true;
  }

  bool intersects(const BitSet& o) const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }
  BitSet& operator|=(const BitSet& o) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  BitSet& operator&=(const BitSet& o) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  /// Removes the bits of o.
  BitSet& operator-=(const BitSet& o) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }

  /// Index of the lowest unset bit below width(), or width() if full.
  std::size_t first_unset() const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if (~words_[i]) {
        const std::size_t b = i * 64 + static_cast<std::size_t>(std::countr_one(words_[i]));
        return b < width_ ? b : width_;
      }
    }
    return width_;
  }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      std::uint64_t w = words_[i];
      while (w) {
        f(i * 64 + static_cast<std::size_t>(std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

  const std::vector<std::uint64_t>& words() const noexcept { return words_; }

  friend bool operator==(const BitSet&, const BitSet&) = default;

 private:
  std::size_t width_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace slu
