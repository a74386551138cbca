#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "slu/ar_group.hpp"
#include "slu/design.hpp"
#include "slu/parallelism.hpp"
#include "slu/perm_group.hpp"
#include "slu/unital.hpp"

namespace slu {

/// Elements fixing every listed block setwise (brute force over the full group).
std::vector<ArElem> fixing_set(const ArGroup& ar, std::span<const BlockId> blocks);

/// The left multiplication x -> t x written as gamma_{t^{-1}} rho_t.
ArElem left_multiplication(const ArGroup& ar, Point t);

/// Point permutation of the closure induced by (alpha, h); pi must be
/// stabilized. Points at infinity follow the class images.
Perm closure_permutation(const ArGroup& ar, const Parallelism& pi, std::size_t alpha, Point h);

/// Translations with one center. `members` contains the identity.
struct TranslationReport {
  std::uint32_t center = 0;
  /// Sylow label when the center is a point at infinity.
  std::optional<std::size_t> sylow;
  std::vector<Perm> members;
  /// Filled by the algebraic path only.
  std::vector<ArElem> elements;
  std::uint64_t order = 0;
  GroupFingerprint fingerprint;
  bool is_translation_center = false;
  /// No nontrivial member fixes a point other than the center.
  bool semiregular = true;
};

/// Translations of the closure of u by pi with center at the point at
/// infinity labelled `sylow`: elements fixing that class blockwise,
/// stabilizing pi and preserving u. Needs q >= 3.
TranslationReport translations_at_infinity(const ArGroup& ar, const AffineUnital& u,
                                           const Parallelism& pi, std::size_t sylow);

/// Translation group with center c via colored automorphism search.
TranslationReport translations_at(const Design& d, std::uint32_t c, unsigned q);

/// One report per point whose translation group is nontrivial.
std::vector<TranslationReport> all_translations(const Design& d, unsigned q);

/// Exhaustive check: the elements fixing every coset T g (g in N(T)) and
/// one coset T f (f lower unitriangular, f != 1) are exactly the left
/// multiplications by T.
bool lemma_transt_check(const ArGroup& ar);

}  // namespace slu
