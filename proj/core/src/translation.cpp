#include "slu/translation.hpp"

#include <algorithm>
#include <set>

#include "slu/closure.hpp"
#include "slu/error.hpp"
#include "slu/iso.hpp"

namespace slu {

std::vector<ArElem> fixing_set(const ArGroup& ar, std::span<const BlockId> blocks) {
  std::vector<ArElem> out;
  ar.for_each([&](std::size_t alpha, Point h) {
    for (BlockId b : blocks)
      if (ar.apply_block(alpha, h, b) != b) return;
    out.push_back(ar.element(alpha, h));
  });
  return out;
}

ArElem left_multiplication(const ArGroup& ar, Point t) {
  const SL2& g = ar.group();
  return ar.compose(ar.gamma(g.elem(g.inv(t))), ar.rho(t));
}

Perm closure_permutation(const ArGroup& ar, const Parallelism& pi, std::size_t alpha, Point h) {
  const SL2& g = ar.group();
  const std::size_t n = g.order();
  Perm out(n + pi.class_count());
  for (Point x = 0; x < n; ++x) out[x] = ar.apply(alpha, h, x);
  for (std::size_t s = 0; s < pi.class_count(); ++s) {
    const BlockId b = g.right_coset(s, g.one());
    const std::size_t c = pi.class_of(ar.apply_block(alpha, h, b));
    out[infinity_point(g, s)] = infinity_point(g, class_sylow(g, pi, c));
  }
  return out;
}

namespace {

void finish(TranslationReport& r, unsigned q) {
  r.order = r.members.size();
  r.is_translation_center = r.order == q;
  for (const auto& m : r.members) {
    if (is_identity(m)) continue;
    for (std::uint32_t x = 0; x < m.size(); ++x)
      if (x != r.center && m[x] == x) r.semiregular = false;
  }
  if (!r.members.empty()) {
    const std::size_t degree = r.members.front().size();
    r.fingerprint = FiniteGroup(degree, r.members).fingerprint();
  }
}

}  // namespace

TranslationReport translations_at_infinity(const ArGroup& ar, const AffineUnital& u,
                                           const Parallelism& pi, std::size_t sylow) {
  const SL2& g = ar.group();
  TranslationReport r;
  r.center = infinity_point(g, sylow);
  r.sylow = sylow;
  const std::size_t c = pi.class_of(g.right_coset(sylow, g.one()));
  std::vector<BlockId> cls;
  for (BlockId b = 0; b < pi.block_count(); ++b)
    if (pi.class_of(b) == c) cls.push_back(b);
  ar.for_each([&](std::size_t alpha, Point h) {
    for (BlockId b : cls)
      if (ar.apply_block(alpha, h, b) != b) return;
    if (!maps_to(ar, pi, pi, alpha, h) || !u.is_automorphism(ar, alpha, h)) return;
    r.elements.push_back(ar.element(alpha, h));
    r.members.push_back(closure_permutation(ar, pi, alpha, h));
  });
  finish(r, g.q());
  return r;
}

TranslationReport translations_at(const Design& d, std::uint32_t c, unsigned q) {
  Coloring col;
  col.points.assign(d.v, 0);
  col.points[c] = 1;
  col.blocks.assign(d.blocks.size(), 0);
  std::uint32_t next = 1;
  for (std::size_t i = 0; i < d.blocks.size(); ++i)
    if (std::binary_search(d.blocks[i].begin(), d.blocks[i].end(), c)) col.blocks[i] = next++;
  const auto aut = automorphisms(d, col);
  TranslationReport r;
  r.center = c;
  if (c >= d.infinite_from && c < d.v) r.sylow = c - d.infinite_from;
  r.members = FiniteGroup(d.v, aut.generators).elements();
  finish(r, q);
  return r;
}

std::vector<TranslationReport> all_translations(const Design& d, unsigned q) {
  std::vector<TranslationReport> out;
  for (std::uint32_t c = 0; c < d.v; ++c) {
    auto r = translations_at(d, c, q);
    if (r.order > 1) out.push_back(std::move(r));
  }
  return out;
}

bool lemma_transt_check(const ArGroup& ar) {
  const SL2& g = ar.group();
  const Field& f = g.field();
  const Subgroup& t = g.sylows()[0];
  std::set<BlockId> m;
  for (Point x : g.normalizer(t).members) m.insert(g.right_coset(0, x));
  m.insert(g.right_coset(0, g.index(Mat2{f.one(), f.zero(), f.one(), f.one()})));
  const std::vector<BlockId> blocks(m.begin(), m.end());
  const auto fix = fixing_set(ar, blocks);
  std::set<ArElem> expected;
  for (Point x : t.members) expected.insert(left_multiplication(ar, x));
  return std::set<ArElem>(fix.begin(), fix.end()) == expected;
}

}  // namespace slu
