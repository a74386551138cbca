#include <gtest/gtest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "slu/error.hpp"
#include "slu/parallelism.hpp"
#include "support.hpp"

namespace slu {
namespace {

struct Order {
  unsigned p, e;
};

void expect_valid(const SL2& g, const Parallelism& pi) {
  const auto rep = verify_parallelism(g, pi);
  EXPECT_TRUE(rep.ok) << rep.violation;
  const std::size_t q = g.q();
  ASSERT_EQ(pi.class_count(), q + 1);
  for (const auto& cls : pi.classes()) {
    EXPECT_EQ(cls.size(), q * q - 1);
    std::vector<char> seen(g.order(), 0);
    for (BlockId b : cls)
      for (Point x : g.block_points(b)) {
        EXPECT_FALSE(seen[x]);
        seen[x] = 1;
      }
  }
}

TEST(Parallelism, ConstructionsAreValid) {
  for (auto [p, e] : {Order{2, 1}, Order{3, 1}, Order{2, 2}, Order{5, 1}, Order{7, 1}, Order{2, 3}, Order{3, 2},
                      Order{11, 1}, Order{2, 4}}) {
    SCOPED_TRACE(std::to_string(p) + "^" + std::to_string(e));
    const SL2 g(p, e);
    const auto fl = flat(g), na = natural(g);
    expect_valid(g, fl);
    expect_valid(g, na);
    for (BlockId b = 0; b < g.block_count(); ++b) {
      EXPECT_EQ(class_sylow(g, fl, fl.class_of(b)), g.block_right_sylow(b));
      EXPECT_EQ(class_sylow(g, na, na.class_of(b)), g.block_left_sylow(b));
    }
    if (p != 2) {
      expect_valid(g, pi_odd(g));
      expect_valid(g, pi_odd(g, true));
    }
    if (e % 2 == 0) {
      expect_valid(g, pi_sq(g));
      expect_valid(g, invert(g, pi_sq(g)));
    }
    expect_valid(g, invert(g, fl));
    EXPECT_EQ(invert(g, fl), na);
  }
}

TEST(Parallelism, CanonicalLabels) {
  const SL2 g(3, 1);
  const auto pi = pi_odd(g);
  auto labels = pi.labels();
  for (auto& l : labels) l = 7 - l;
  EXPECT_EQ(Parallelism::from_labels(labels), pi);
  EXPECT_EQ(Parallelism::from_classes(g.block_count(), pi.classes()), pi);
  const auto cls = pi.classes();
  for (std::size_t c = 1; c < cls.size(); ++c) EXPECT_LT(cls[c - 1].front(), cls[c].front());
}

TEST(Parallelism, ImagesStayValid) {
  for (auto [p, e] : {Order{3, 1}, Order{2, 2}, Order{5, 1}}) {
    const SL2 g(p, e);
    const ArGroup ar(g);
    const std::vector<Parallelism> seeds = p == 2 ? std::vector{flat(g), natural(g), pi_sq(g)}
                                                  : std::vector{flat(g), natural(g), pi_odd(g)};
    for (const auto& pi : seeds)
      for (int i = 0; i < 20; ++i) {
        const auto alpha = test::pick(ar.semilinear_count());
        const auto h = static_cast<Point>(test::pick(g.order()));
        const auto img = image(ar, pi, alpha, h);
        expect_valid(g, img);
        EXPECT_TRUE(maps_to(ar, pi, img, alpha, h));
        EXPECT_EQ(image(ar, pi, ar.element(alpha, h)), img);
        const auto back = image(ar, img, ar.inverse(ar.element(alpha, h)));
        EXPECT_EQ(back, pi);
      }
  }
}

TEST(Parallelism, VerifyReportsWitness) {
  const SL2 g(2, 2);
  auto classes = flat(g).classes();
  std::swap(classes[0][0], classes[1][0]);
  const auto rep = verify_parallelism(g, classes);
  EXPECT_FALSE(rep.ok);
  ASSERT_EQ(rep.witness.size(), 2u);
  ASSERT_TRUE(rep.point.has_value());
  for (BlockId b : rep.witness) {
    const auto& pts = g.block_points(b);
    EXPECT_TRUE(std::binary_search(pts.begin(), pts.end(), *rep.point));
  }
  auto short_class = flat(g).classes();
  short_class[0].pop_back();
  EXPECT_FALSE(verify_parallelism(g, short_class).ok);
}

TEST(Parallelism, SquareClassCensus) {
  const SL2 g(2, 2);
  const auto pi = pi_sq(g);
  const auto census = class_structure_report(g, pi);
  ASSERT_EQ(census.size(), 5u);
  for (const auto& c : census) {
    const std::size_t bar = bar_sylow(g, c.sylow);
    EXPECT_EQ(c.right_of(c.sylow), 7u);
    EXPECT_EQ(c.both(c.sylow, bar), 3u);
    EXPECT_EQ(c.left_of(bar) - c.both(c.sylow, bar), 8u);
  }
}

TEST(Parallelism, OmegaModes) {
  const SL2 g(3, 1);
  const auto om = omega(g, OmegaMode::Odd);
  for (Point x = 0; x < g.order(); ++x) EXPECT_EQ(om[x] != 0, g.field().is_square(g.elem(x).c));
  const SL2 g4(2, 2);
  const auto sq = omega(g4, OmegaMode::Square);
  for (Point x = 0; x < g4.order(); ++x) EXPECT_EQ(sq[x] != 0, g4.field().in_subfield(g4.elem(x).c));
  EXPECT_EQ(omega_class(g, OmegaMode::Odd, false).size(), 8u);
}

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::Parse;
}

TEST(Parallelism, Errors) {
  const SL2 g4(2, 2), g5(5, 1);
  EXPECT_EQ(kind_of([&] { pi_odd(g4); }), ErrorKind::EvenOrder);
  EXPECT_EQ(kind_of([&] { pi_sq(g5); }), ErrorKind::NotSquareOrder);
  EXPECT_EQ(kind_of([&] { omega(g4, OmegaMode::Odd); }), ErrorKind::BadMode);
  EXPECT_EQ(kind_of([&] { omega(g5, OmegaMode::Square); }), ErrorKind::BadMode);
}

// Independent enumeration: spreads by plain backtracking on the least
// uncovered point, then partitions of the blocks into spreads the same way.
std::set<std::vector<std::uint32_t>> oracle_parallelisms(const SL2& g) {
  const std::size_t n = g.order(), nb = g.block_count();
  std::vector<std::vector<BlockId>> through(n);
  for (BlockId b = 0; b < nb; ++b)
    for (Point x : g.block_points(b)) through[x].push_back(b);
  std::vector<std::vector<BlockId>> spreads;
  std::vector<char> covered(n, 0);
  std::vector<BlockId> cur;
  auto spread = [&](auto&& self) -> void {
    const auto it = std::find(covered.begin(), covered.end(), 0);
    if (it == covered.end()) {
      auto s = cur;
      std::sort(s.begin(), s.end());
      spreads.push_back(s);
      return;
    }
    for (BlockId b : through[static_cast<std::size_t>(it - covered.begin())]) {
      const auto& pts = g.block_points(b);
      if (std::any_of(pts.begin(), pts.end(), [&](Point x) { return covered[x] != 0; })) continue;
      for (Point x : pts) covered[x] = 1;
      cur.push_back(b);
      self(self);
      cur.pop_back();
      for (Point x : pts) covered[x] = 0;
    }
  };
  spread(spread);

  std::vector<std::vector<std::size_t>> spreads_with(nb);
  for (std::size_t s = 0; s < spreads.size(); ++s)
    for (BlockId b : spreads[s]) spreads_with[b].push_back(s);
  std::set<std::vector<std::uint32_t>> out;
  std::vector<std::uint32_t> label(nb, ~0u);
  std::uint32_t used = 0;
  auto part = [&](auto&& self) -> void {
    const auto it = std::find(label.begin(), label.end(), ~0u);
    if (it == label.end()) {
      out.insert(Parallelism::from_labels(label).labels());
      return;
    }
    for (std::size_t s : spreads_with[static_cast<std::size_t>(it - label.begin())]) {
      if (std::any_of(spreads[s].begin(), spreads[s].end(), [&](BlockId b) { return label[b] != ~0u; })) continue;
      for (BlockId b : spreads[s]) label[b] = used;
      ++used;
      self(self);
      --used;
      for (BlockId b : spreads[s]) label[b] = ~0u;
    }
  };
  part(part);
  return out;
}

TEST(Parallelism, EnumerationMatchesOracle) {
  for (unsigned p : {2u, 3u}) {
    const SL2 g(p, 1);
    const auto want = oracle_parallelisms(g);
    const auto got = enumerate_parallelisms(g, {0, 2});
    EXPECT_TRUE(got.complete);
    std::set<std::vector<std::uint32_t>> have;
    for (const auto& pi : got.parallelisms) {
      expect_valid(g, pi);
      have.insert(pi.labels());
    }
    EXPECT_EQ(have.size(), got.parallelisms.size());
    EXPECT_EQ(have, want) << "q=" << p;
    EXPECT_TRUE(std::is_sorted(got.parallelisms.begin(), got.parallelisms.end()));
  }
  EXPECT_EQ(oracle_parallelisms(SL2(3, 1)).size(), 26u);
}

TEST(Parallelism, EnumerationIsThreadIndependent) {
  const SL2 g(3, 1);
  const auto a = enumerate_parallelisms(g, {0, 1});
  const auto b = enumerate_parallelisms(g, {0, 4});
  EXPECT_EQ(a.parallelisms, b.parallelisms);
  EXPECT_EQ(a.spread_count, b.spread_count);
  const auto cut = enumerate_parallelisms(g, {5, 1});
  EXPECT_FALSE(cut.complete);
}

TEST(Parallelism, Stabilizers) {
  const SL2 g3(3, 1), g4(2, 2), g5(5, 1), g9(3, 2);
  const ArGroup a3(g3), a4(g4), a5(g5), a9(g9);
  EXPECT_EQ(stabilizer(a3, pi_odd(g3)).size(), 24u);
  EXPECT_EQ(stabilizer(a5, pi_odd(g5)).size(), 120u);
  EXPECT_EQ(stabilizer(a4, pi_sq(g4)).size(), 120u);
  EXPECT_EQ(stabilizer(a9, pi_sq(g9)).size(), 1440u);
  // Closed form 2e(q^2-1)q^2(q^2+1) with q = p^e the subfield order.
  for (auto [ar, q] : {std::pair{&a4, 2u}, std::pair{&a9, 3u}}) {
    const std::uint64_t qq = q * q, e = 1;
    EXPECT_EQ(stabilizer(*ar, pi_sq(ar->group())).size(), 2 * e * (qq - 1) * qq * (qq + 1));
  }
}

TEST(Parallelism, OrbitStabilizer) {
  const SL2 g(3, 1);
  const ArGroup ar(g);
  const auto gens = ar_generators(ar);
  for (const auto& pi : {flat(g), natural(g), pi_odd(g), pi_odd(g, true)}) {
    const auto orb = orbit(ar, pi, gens);
    EXPECT_EQ(orb.size() * stabilizer(ar, pi).size(), ar.order());
    EXPECT_TRUE(std::binary_search(orb.begin(), orb.end(), pi));
  }
  const auto all = enumerate_parallelisms(g).parallelisms;
  const auto group = ar.enumerate();
  const auto orbs = parallelism_orbits(ar, all, group);
  std::size_t total = 0;
  for (const auto& o : orbs) {
    total += o.size();
    EXPECT_TRUE(std::is_sorted(o.begin(), o.end()));
  }
  EXPECT_EQ(total, all.size());
}

TEST(Parallelism, NonEquivalence) {
  const SL2 g4(2, 2), g9(3, 2);
  const ArGroup a4(g4), a9(g9);
  EXPECT_FALSE(equivalence(a4, pi_sq(g4), invert(g4, pi_sq(g4))).has_value());
  EXPECT_FALSE(equivalence(a9, pi_sq(g9), invert(g9, pi_sq(g9))).has_value());
  EXPECT_FALSE(equivalence(a9, pi_sq(g9), pi_odd(g9)).has_value());
  EXPECT_FALSE(equivalence(a9, invert(g9, pi_sq(g9)), pi_odd(g9)).has_value());
  const auto t = a4.element(17, 5);
  const auto img = image(a4, pi_sq(g4), t);
  const auto found = equivalence(a4, pi_sq(g4), img);
  ASSERT_TRUE(found.has_value());
  EXPECT_EQ(image(a4, pi_sq(g4), *found), img);
}

}  // namespace
}  // namespace slu
