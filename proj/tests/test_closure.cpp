#include <gtest/gtest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "slu/closure.hpp"
#include "slu/error.hpp"
#include "slu/iso.hpp"
#include "support.hpp"

namespace slu {
namespace {

Coloring infinity_colors(const Design& d) {
  Coloring c;
  c.points.assign(d.v, 0);
  for (std::uint32_t x = d.infinite_from; x < d.v; ++x) c.points[x] = 1;
  return c;
}

bool isomorphic_fixing_infinity(const Design& a, const Design& b) {
  return isomorphism(a, b, infinity_colors(a), infinity_colors(b)).has_value();
}

void expect_closure_shape(const SL2& g, const AffineUnital& u, const Parallelism& pi) {
  const Design d = close(u, pi);
  const std::size_t q = g.q();
  EXPECT_TRUE(verify_design(d, static_cast<unsigned>(q)).ok);
  EXPECT_EQ(d.v, q * q * q + 1);
  EXPECT_EQ(d.infinite_from, g.order());
  const auto& inf = d.blocks[infinity_block(d)];
  ASSERT_EQ(inf.size(), q + 1);
  for (std::size_t s = 0; s <= q; ++s) EXPECT_EQ(inf[s], infinity_point(g, s));
  // Each short block gains the point of its class.
  for (const auto& b : d.blocks) {
    if (&b == &inf) continue;
    const auto infinite = std::count_if(b.begin(), b.end(), [&](auto x) { return x >= d.infinite_from; });
    ASSERT_LE(infinite, 1);
    if (infinite == 1) {
      std::vector<Point> pts(b.begin(), b.end() - 1);
      const auto blk = g.find_block(pts);
      ASSERT_TRUE(blk.has_value());
      EXPECT_EQ(infinity_point(g, class_sylow(g, pi, pi.class_of(*blk))), b.back());
    }
  }
}

TEST(Closure, DesignsAreUnitals) {
  const auto& c3 = test::context(3, 1);
  for (const auto& pi : {flat(*c3.g), natural(*c3.g), pi_odd(*c3.g), pi_odd(*c3.g, true)})
    expect_closure_shape(*c3.g, c3.unitals[0], pi);
  const auto& c4 = test::context(2, 2);
  for (const auto& u : c4.unitals)
    for (const auto& pi : {flat(*c4.g), natural(*c4.g), pi_sq(*c4.g), invert(*c4.g, pi_sq(*c4.g))})
      expect_closure_shape(*c4.g, u, pi);
  const auto& c2 = test::context(2, 1);
  expect_closure_shape(*c2.g, c2.unitals[0], flat(*c2.g));
}

TEST(Closure, NaturalClosureIsClassical) {
  const auto& c3 = test::context(3, 1);
  EXPECT_EQ(automorphisms(close(c3.unitals[0], natural(*c3.g))).order, 12096u);
  const auto& c4 = test::context(2, 2);
  EXPECT_EQ(automorphisms(close(c4.unitals[0], natural(*c4.g))).order, 249600u);
}

// Equivalence under Aut(U) coincides with isomorphism of closures fixing the
// block at infinity.
TEST(Closure, EquivalenceMatchesIsomorphismAtOrderThree) {
  const auto& c = test::context(3, 1);
  const auto& u = c.unitals[0];
  const auto all = enumerate_parallelisms(*c.g).parallelisms;
  ASSERT_EQ(all.size(), 26u);
  const auto aut = aut_affine(*c.ar, u);
  const auto orbs = parallelism_orbits(*c.ar, all, aut);
  std::vector<std::size_t> sizes;
  for (const auto& o : orbs) sizes.push_back(o.size());
  std::sort(sizes.begin(), sizes.end());
  EXPECT_EQ(sizes, (std::vector<std::size_t>{1, 1, 24}));
  std::vector<Design> reps;
  for (const auto& o : orbs) {
    reps.push_back(close(u, all[o.front()]));
    for (std::size_t k = 1; k < o.size(); k += 7)
      EXPECT_TRUE(isomorphic_fixing_infinity(reps.back(), close(u, all[o[k]])));
  }
  for (std::size_t i = 0; i < reps.size(); ++i)
    for (std::size_t j = i + 1; j < reps.size(); ++j) EXPECT_FALSE(isomorphic_fixing_infinity(reps[i], reps[j]));
}

TEST(Closure, EquivalenceMatchesIsomorphismAtOrderFour) {
  const auto& c = test::context(2, 2);
  const auto& u = c.unitals[0];
  const auto aut = aut_affine(*c.ar, u);
  const auto sq = pi_sq(*c.g), sq_inv = invert(*c.g, sq);
  const Design base = close(u, sq);
  for (int i = 0; i < 5; ++i) {
    const auto img = image(*c.ar, sq, aut[test::pick(aut.size())]);
    EXPECT_TRUE(isomorphic_fixing_infinity(base, close(u, img)));
  }
  const bool equivalent = std::any_of(aut.begin(), aut.end(),
                                      [&](const ArElem& t) { return image(*c.ar, sq, t) == sq_inv; });
  EXPECT_FALSE(equivalent);
  EXPECT_FALSE(isomorphic_fixing_infinity(base, close(u, sq_inv)));
  EXPECT_FALSE(isomorphic_fixing_infinity(base, close(u, flat(*c.g))));
}

TEST(Closure, RejectsInvalidParallelism) {
  const auto& c = test::context(3, 1);
  auto classes = flat(*c.g).classes();
  std::swap(classes[0][0], classes[1][0]);
  const auto broken = Parallelism::from_classes(c.g->block_count(), classes);
  try {
    close(c.unitals[0], broken);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InvalidParallelism);
  }
}

}  // namespace
}  // namespace slu
