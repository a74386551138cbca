#include <gtest/gtest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "slu/closure.hpp"
#include "slu/iso.hpp"
#include "slu/translation.hpp"
#include "support.hpp"

namespace slu {
namespace {

std::vector<BlockId> class_of_sylow(const SL2& g, const Parallelism& pi, std::size_t sylow) {
  for (std::size_t c = 0; c < pi.class_count(); ++c)
    if (class_sylow(g, pi, c) == sylow) return pi.classes()[c];
  return {};
}

TEST(Translation, LeftMultiplication) {
  const SL2 g(2, 2);
  const ArGroup ar(g);
  for (Point t = 0; t < g.order(); t += 5)
    for (Point x = 0; x < g.order(); ++x) EXPECT_EQ(ar.apply(left_multiplication(ar, t), x), g.mul(t, x));
}

TEST(Translation, FlatClassFixersAreLeftMultiplications) {
  const SL2 g(2, 2);
  const ArGroup ar(g);
  const auto fix = fixing_set(ar, class_of_sylow(g, flat(g), 0));
  std::set<ArElem> want;
  for (Point t : g.sylows()[0].members) want.insert(left_multiplication(ar, t));
  EXPECT_EQ(std::set<ArElem>(fix.begin(), fix.end()), want);
  EXPECT_EQ(fix.size(), 4u);
}

TEST(Translation, OddAndSquareClassFixersAreTrivial) {
  for (unsigned p : {3u, 5u}) {
    const SL2 g(p, 1);
    const ArGroup ar(g);
    for (bool primed : {false, true})
      for (const auto& cls : pi_odd(g, primed).classes()) {
        const auto fix = fixing_set(ar, cls);
        ASSERT_EQ(fix.size(), 1u) << p;
        EXPECT_EQ(fix.front(), ar.identity());
      }
  }
  const SL2 g(2, 2);
  const ArGroup ar(g);
  for (const auto& pi : {pi_sq(g), invert(g, pi_sq(g))})
    for (const auto& cls : pi.classes()) EXPECT_EQ(fixing_set(ar, cls).size(), 1u);
}

TEST(Translation, LeftMultiplicationLemma) {
  for (auto [p, e] : {std::pair{3u, 1u}, std::pair{2u, 2u}, std::pair{5u, 1u}}) {
    const SL2 g(p, e);
    EXPECT_TRUE(lemma_transt_check(ArGroup(g))) << g.q();
  }
}

void expect_semiregular(const TranslationReport& r, std::uint32_t v, unsigned q) {
  EXPECT_TRUE(r.semiregular);
  for (const auto& m : r.members) {
    ASSERT_EQ(m.size(), v);
    if (is_identity(m)) continue;
    for (std::uint32_t x = 0; x < v; ++x)
      if (x != r.center) EXPECT_NE(m[x], x);
  }
  EXPECT_EQ(r.members.size(), r.order);
  EXPECT_EQ(r.is_translation_center, r.order == q);
}

// The algebraic filter and the generic automorphism search must agree.
void expect_paths_agree(const ArGroup& ar, const AffineUnital& u, const Parallelism& pi) {
  const auto& g = ar.group();
  const Design d = close(u, pi);
  for (std::size_t s = 0; s < pi.class_count(); ++s) {
    const auto alg = translations_at_infinity(ar, u, pi, s);
    const auto gen = translations_at(d, infinity_point(g, s), g.q());
    EXPECT_EQ(alg.center, infinity_point(g, s));
    EXPECT_EQ(alg.order, gen.order);
    auto a = alg.members, b = gen.members;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    EXPECT_EQ(a, b);
    expect_semiregular(alg, d.v, g.q());
    expect_semiregular(gen, d.v, g.q());
    EXPECT_LE(alg.order, g.q());
  }
}

TEST(Translation, DualPathAgreement) {
  const auto& c3 = test::context(3, 1);
  for (const auto& pi : {flat(*c3.g), natural(*c3.g), pi_odd(*c3.g), pi_odd(*c3.g, true)})
    expect_paths_agree(*c3.ar, c3.unitals[0], pi);
  const auto& c4 = test::context(2, 2);
  for (const auto& u : c4.unitals)
    for (const auto& pi : {flat(*c4.g), natural(*c4.g), pi_sq(*c4.g), invert(*c4.g, pi_sq(*c4.g))})
      expect_paths_agree(*c4.ar, u, pi);
}

TEST(Translation, NaturalCentersAreRightMultiplications) {
  for (auto [p, e] : {std::pair{3u, 1u}, std::pair{2u, 2u}}) {
    const auto& c = test::context(p, e);
    const auto pi = natural(*c.g);
    for (const auto& u : c.unitals)
      for (std::size_t s = 0; s < pi.class_count(); ++s) {
        const auto r = translations_at_infinity(*c.ar, u, pi, s);
        EXPECT_TRUE(r.is_translation_center);
        EXPECT_EQ(r.order, c.g->q());
        ASSERT_TRUE(r.sylow.has_value());
        std::set<ArElem> want;
        for (Point x : c.g->sylows()[*r.sylow].members) want.insert(c.ar->rho(x));
        EXPECT_EQ(std::set<ArElem>(r.elements.begin(), r.elements.end()), want);
      }
  }
}

TEST(Translation, FlatAtOrderFourIsDihedral) {
  const auto& c = test::context(2, 2);
  const auto pi = flat(*c.g);
  const auto& u = c.unitals[0];
  const auto nrm = c.g->normalizer(u.s());
  std::vector<Perm> nontrivial;
  for (std::size_t s = 0; s < pi.class_count(); ++s) {
    const auto r = translations_at_infinity(*c.ar, u, pi, s);
    EXPECT_LE(r.order, 2u);
    for (std::size_t k = 0; k < r.elements.size(); ++k) {
      if (r.elements[k] == c.ar->identity()) continue;
      // Left multiplication by an involution normalizing S.
      bool found = false;
      for (Point t : nrm.members)
        if (c.g->element_order(t) == 2 && left_multiplication(*c.ar, t) == r.elements[k]) found = true;
      EXPECT_TRUE(found);
    }
    for (const auto& m : r.members)
      if (!is_identity(m)) nontrivial.push_back(m);
  }
  ASSERT_EQ(nontrivial.size(), 5u);
  const FiniteGroup grp(nontrivial.front().size(), nontrivial);
  EXPECT_EQ(grp.fingerprint(), reference::dihedral(5).fingerprint());
}

TEST(Translation, ClassicalClosureHasOnlyTranslationCenters) {
  const auto& c = test::context(3, 1);
  const Design d = close(c.unitals[0], natural(*c.g));
  const auto reports = all_translations(d, 3);
  ASSERT_EQ(reports.size(), d.v);
  for (const auto& r : reports) {
    EXPECT_TRUE(r.is_translation_center);
    EXPECT_EQ(r.order, 3u);
    expect_semiregular(r, d.v, 3);
  }
}

TEST(Translation, NoneForFlatAndOddAtOrderThree) {
  const auto& c = test::context(3, 1);
  for (const auto& pi : {flat(*c.g), pi_odd(*c.g)}) {
    const Design d = close(c.unitals[0], pi);
    for (std::size_t s = 0; s < pi.class_count(); ++s)
      EXPECT_EQ(translations_at_infinity(*c.ar, c.unitals[0], pi, s).order, 1u);
    // With the block at infinity fixed, every center lies on it.
    ASSERT_TRUE(block_stabilizer_check(d, infinity_block(d)));
    EXPECT_TRUE(all_translations(d, 3).empty());
  }
}

}  // namespace
}  // namespace slu
