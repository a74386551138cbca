#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace slu {

/// Permutation of {0..n-1} as an image table.
using Perm = std::vector<std::uint32_t>;

Perm identity_perm(std::size_t n);
/// a then b: x -> b[a[x]].
Perm compose(const Perm& a, const Perm& b);
Perm inverse(const Perm& a);
bool is_identity(const Perm& a) noexcept;
std::size_t perm_order(const Perm& a);

/// Orbits of the group generated by gens on {0..n-1}; each orbit sorted,
/// orbits ordered by least element.
std::vector<std::vector<std::uint32_t>> orbits(std::size_t n, std::span<const Perm> gens);

/// Base-and-strong-generating-set representation (Knuth's formulation of
/// Schreier-Sims with the base 0, 1, ..., n-1).
class PermGroup {
 public:
  PermGroup(std::size_t degree, std::span<const Perm> gens);

  std::size_t degree() const noexcept { return n_; }
  std::uint64_t order() const;
  bool contains(const Perm& g) const;
  /// Adds a generator; no-op if already a member.
  void add(const Perm& g);

 private:
  std::size_t n_;
  // reps_[k][j]: index into store_ of an element mapping k -> j, fixing 0..k-1; -1 if none.
  std::vector<std::vector<std::int32_t>> reps_;
  std::vector<std::vector<Perm>> strong_;
  std::vector<Perm> store_;
  std::vector<Perm> store_inv_;

  bool sift(Perm g, std::size_t k) const;
  void extend(std::size_t k, const Perm& g);
  void enter(std::size_t k, const Perm& g);
};

/// Coarse structure summary used in place of isomorphism-type names.
struct GroupFingerprint {
  std::uint64_t order = 0;
  bool abelian = false;
  std::uint64_t center_order = 0;
  std::uint64_t derived_order = 0;
  std::uint64_t exponent = 0;
  /// element order -> number of elements with that order
  std::map<std::uint64_t, std::uint64_t> element_orders;

  friend bool operator==(const GroupFingerprint&, const GroupFingerprint&) = default;
};

std::string to_string(const GroupFingerprint& fp);

/// A small permutation group with its elements listed. Element 0 is the
/// identity. The multiplication table is built on first use.
class FiniteGroup {
 public:
  static constexpr std::size_t kMaxElements = 300000;
  static constexpr std::size_t kMaxTable = 3000;

  /// Throws Error{TooLarge} if the closure exceeds kMaxElements.
  FiniteGroup(std::size_t degree, std::span<const Perm> gens);

  std::size_t degree() const noexcept { return n_; }
  std::size_t order() const noexcept { return elems_.size(); }
  const std::vector<Perm>& elements() const noexcept { return elems_; }
  const std::vector<Perm>& generators() const noexcept { return gens_; }
  std::optional<std::size_t> index_of(const Perm& p) const;

  GroupFingerprint fingerprint() const;
  bool is_abelian() const;
  /// Elements (indices) commuting with every generator.
  std::vector<std::size_t> center() const;
  std::uint64_t derived_order() const;

  // Index-level subgroup utilities; these need the multiplication table.
  std::size_t mul(std::size_t a, std::size_t b) const;
  std::size_t inv(std::size_t a) const;
  /// Sorted element indices of the subgroup generated by `gens`.
  std::vector<std::size_t> generated(std::span<const std::size_t> gens) const;
  bool is_normal(std::span<const std::size_t> subgroup) const;
  /// All subgroups of the given order generated by at most two elements.
  std::vector<std::vector<std::size_t>> subgroups_of_order(std::size_t order) const;
  /// Fingerprint of a subgroup given by element indices.
  GroupFingerprint subgroup_fingerprint(std::span<const std::size_t> subgroup) const;

 private:
  std::size_t n_;
  std::vector<Perm> gens_;
  std::vector<Perm> elems_;
  std::map<Perm, std::size_t> index_;
  mutable std::vector<std::uint32_t> table_;
  mutable std::vector<std::uint32_t> inv_;

  void ensure_table() const;
};

/// True iff g has a normal subgroup N and a subgroup X with N cap X = 1,
/// |N||X| = |g|, fp(N) = normal_fp and fp(X) = complement_fp. With
/// `direct`, X must also centralize N.
bool has_split_extension(const FiniteGroup& g, const GroupFingerprint& normal_fp,
                         const GroupFingerprint& complement_fp, bool direct = false);

/// Concrete small groups for fingerprint matching.
namespace reference {
FiniteGroup cyclic(std::size_t n);
FiniteGroup dihedral(std::size_t n);  // order 2n
FiniteGroup alternating4();
FiniteGroup frobenius20();  // C5 x| C4 acting faithfully
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);
FiniteGroup elementary_abelian(std::size_t rank);  // (C2)^rank
}  // namespace reference

}  // namespace slu
