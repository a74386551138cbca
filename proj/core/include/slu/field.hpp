#pragma once

#include <compare>
#include <cstdint>
#include <vector>

namespace slu {

/// An element of GF(p^e), stored as its coefficient tuple (c0, ..., c_{e-1})
/// read as a base-p integer with c0 least significant.
struct FieldElem {
  std::uint32_t code = 0;

  friend constexpr auto operator<=>(FieldElem, FieldElem) = default;
};

/// GF(p^e) with a fixed modulus: the lexicographically least primitive monic
/// polynomial of degree e (coefficients compared from the constant term up).
///
/// Multiplication goes through discrete log tables built from the root of the
/// modulus, so the canonical generator always has order q - 1. When e is even
/// the field carries the index-2 subfield GF(p^{e/2}) and the involution
/// x -> x^{p^{e/2}} ("bar").
///
/// Immutable after construction; all operations are const.
class Field {
 public:
  static constexpr std::uint32_t kMaxOrder = 1u << 16;

  /// Throws Error{NotPrime} or Error{TooLarge}.
  Field(unsigned p, unsigned e);

  unsigned p() const noexcept { return p_; }
  unsigned e() const noexcept { return e_; }
  std::uint32_t q() const noexcept { return q_; }

  /// Low coefficients c0..c_{e-1} of the monic modulus x^e + ... + c0.
  const std::vector<unsigned>& modulus() const noexcept { return modulus_; }

  FieldElem zero() const noexcept { return {0}; }
  FieldElem one() const noexcept { return {1}; }
  /// Root of the modulus; a primitive element.
  FieldElem generator() const noexcept { return exp_[1 % exp_.size()]; }
  FieldElem elem(std::uint32_t code) const;
  /// Image of an integer under Z -> GF(p).
  FieldElem from_int(long long v) const;

  FieldElem add(FieldElem a, FieldElem b) const noexcept;
  FieldElem sub(FieldElem a, FieldElem b) const noexcept { return add(a, neg(b)); }
  FieldElem neg(FieldElem a) const noexcept { return FieldElem{neg_[a.code]}; }
  FieldElem mul(FieldElem a, FieldElem b) const noexcept;
  /// Throws Error{DivisionByZero} for 0.
  FieldElem inv(FieldElem a) const;
  FieldElem div(FieldElem a, FieldElem b) const { return mul(a, inv(b)); }
  FieldElem pow(FieldElem a, long long k) const;

  /// a^(p^l); l may be negative and is reduced mod e.
  FieldElem frobenius(FieldElem a, long long l) const noexcept;

  /// True iff a = b^2 for some b; 0 counts as a square.
  bool is_square(FieldElem a) const noexcept { return square_[a.code] != 0; }

  /// Discrete log to the canonical generator; a must be nonzero.
  std::uint32_t log(FieldElem a) const;
  FieldElem exp(long long k) const noexcept;

  bool has_half_subfield() const noexcept { return e_ % 2 == 0; }
  /// x -> x^{p^{e/2}}; throws Error{NotSquareOrder} if e is odd.
  FieldElem bar(FieldElem a) const;
  bool in_subfield(FieldElem a) const;
  /// Order of the index-2 subfield, p^{e/2}.
  std::uint32_t subfield_order() const;

  /// Coefficient c_i of the element (i < e).
  unsigned coefficient(FieldElem a, unsigned i) const noexcept;

 private:
  unsigned p_;
  unsigned e_;
  std::uint32_t q_;
  std::vector<std::uint32_t> pw_;  // p^i
  std::vector<unsigned> modulus_;
  std::vector<std::uint32_t> neg_;
  std::vector<FieldElem> exp_;      // exp_[k] = g^k, k in [0, q-1)
  std::vector<std::uint32_t> log_;  // log_[code], undefined for 0
  std::vector<std::uint16_t> add_;  // dense table when q is small
  std::vector<std::uint8_t> square_;

  std::uint32_t add_digits(std::uint32_t a, std::uint32_t b) const noexcept;
};

/// Brute-force truth of: if x in GF(q^2)^x and c in GF(q)^x with x*bar(x) = c^2,
/// then x is a square in GF(q^2). `f2` must carry the index-2 subfield.
bool lemma_fqqq_check(const Field& f2);

bool is_prime(unsigned n) noexcept;

}  // namespace slu
