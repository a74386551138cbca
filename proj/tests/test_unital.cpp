#include <gtest/gtest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "slu/error.hpp"
#include "slu/iso.hpp"
#include "slu/unital.hpp"
#include "support.hpp"

namespace slu {
namespace {

struct Order {
  unsigned p, e;
};

std::string order_name(const ::testing::TestParamInfo<Order>& info) {
  return "p" + std::to_string(info.param.p) + "e" + std::to_string(info.param.e);
}

class UnitalOrder : public ::testing::TestWithParam<Order> {
 protected:
  const test::Context& ctx() const { return test::context(GetParam().p, GetParam().e); }
};

TEST_P(UnitalOrder, SearchSolutionsSatisfyPartitionConditions) {
  const auto& c = ctx();
  const std::size_t q = c.g->q();
  EXPECT_TRUE(c.search.complete);
  ASSERT_FALSE(c.search.solutions.empty());
  EXPECT_EQ(c.s.order(), q + 1);
  EXPECT_TRUE(is_cyclic(*c.g, c.s));
  for (const auto& sol : c.search.solutions) {
    EXPECT_EQ(sol.size(), q - 2);
    for (const auto& d : sol) {
      EXPECT_EQ(d.size(), q + 1);
      EXPECT_TRUE(std::binary_search(d.begin(), d.end(), c.g->one()));
      EXPECT_TRUE(verify_Q(*c.g, d));
      EXPECT_EQ(quotient_set(*c.g, d).size(), q * (q + 1));
    }
    EXPECT_TRUE(verify_P(*c.g, c.s, sol));
  }
}

// Axioms checked directly on the block list: point count, block sizes,
// unique joining block, q+1 short blocks and q^2 blocks per point, and the
// short blocks falling into classes of pairwise disjoint blocks.
TEST_P(UnitalOrder, AffineAxiomsOnEveryUnital) {
  const auto& c = ctx();
  const std::size_t q = c.g->q(), n = c.g->order();
  for (const auto& u : c.unitals) {
    const Design d = u.design();
    EXPECT_TRUE(verify_affine_axioms(d, static_cast<unsigned>(q)).ok);
    EXPECT_EQ(d.v, q * q * q - q);
    std::vector<int> join(n * n, 0);
    std::vector<std::size_t> degree(n, 0), short_degree(n, 0);
    for (const auto& b : d.blocks) {
      ASSERT_TRUE(b.size() == q || b.size() == q + 1);
      for (auto x : b) {
        ++degree[x];
        if (b.size() == q) ++short_degree[x];
        for (auto y : b)
          if (x != y) ++join[x * n + y];
      }
    }
    for (std::size_t x = 0; x < n; ++x) {
      EXPECT_EQ(degree[x], q * q);
      EXPECT_EQ(short_degree[x], q + 1);
      for (std::size_t y = 0; y < n; ++y)
        if (x != y) ASSERT_EQ(join[x * n + y], 1) << x << ' ' << y;
    }
    // Cosets of S, plus n translates of each D.
    EXPECT_EQ(d.blocks.size() - c.g->block_count(), n / (q + 1) + (q - 2) * n);
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = x + 1; y < n; y += 5) {
        const auto lb = u.long_block_through(static_cast<Point>(x), static_cast<Point>(y));
        const bool on_short = c.g->block_through(static_cast<Point>(x), static_cast<Point>(y)) != SL2::kNoBlock;
        EXPECT_EQ(lb == AffineUnital::kShort, on_short);
      }
  }
}

TEST_P(UnitalOrder, AutomorphismsAgreeAcrossPaths) {
  const auto& c = ctx();
  for (std::size_t k = 0; k < c.unitals.size(); ++k) {
    const auto& u = c.unitals[k];
    const auto aut = aut_affine(*c.ar, u);
    EXPECT_EQ(aut.size(), c.types[k].aut_order);
    std::set<ArElem> members(aut.begin(), aut.end());
    EXPECT_TRUE(members.count(c.ar->identity()));
    for (const auto& t : aut) EXPECT_TRUE(u.is_automorphism(*c.ar, c.ar->alpha_of(t), t.rmul));
    for (int i = 0; i < 200; ++i) {
      const auto& s = aut[test::pick(aut.size())];
      const auto& t = aut[test::pick(aut.size())];
      EXPECT_TRUE(members.count(c.ar->compose(s, t)));
      EXPECT_TRUE(members.count(c.ar->inverse(s)));
    }
    // Generic design automorphisms see the same group for q >= 3.
    if (c.g->q() >= 3) {
      const auto generic = automorphisms(u.design());
      EXPECT_EQ(generic.order, aut.size());
      std::vector<Perm> perms;
      for (const auto& t : aut) perms.push_back(c.ar->permutation(t));
      const PermGroup pg(u.point_count(), perms);
      EXPECT_EQ(pg.order(), aut.size());
      for (const auto& gen : generic.generators) EXPECT_TRUE(pg.contains(gen));
    }
  }
}

TEST_P(UnitalOrder, FromDesignRoundTrip) {
  const auto& c = ctx();
  for (const auto& u : c.unitals) {
    const Design d = u.design();
    const auto back = AffineUnital::from_design(*c.g, d);
    EXPECT_EQ(back.design(), d);
    EXPECT_EQ(back.s(), u.s());
  }
}

INSTANTIATE_TEST_SUITE_P(Orders, UnitalOrder, ::testing::Values(Order{2, 1}, Order{3, 1}, Order{2, 2}),
                         order_name);

TEST(Unital, Classification) {
  const auto& c3 = test::context(3, 1);
  ASSERT_EQ(c3.types.size(), 1u);
  EXPECT_EQ(c3.types[0].aut_order, 192u);
  EXPECT_TRUE(c3.types[0].classical);
  const auto& c4 = test::context(2, 2);
  ASSERT_EQ(c4.types.size(), 2u);
  EXPECT_EQ(c4.types[0].aut_order, 1200u);
  EXPECT_EQ(c4.types[1].aut_order, 240u);
  EXPECT_TRUE(c4.types[0].classical);
  EXPECT_FALSE(c4.types[1].classical);
  EXPECT_EQ(c4.types[1].members.size(), 5u);
  EXPECT_FALSE(isomorphic(c4.unitals[0].design(), c4.unitals[1].design()));
  std::size_t total = 0;
  for (const auto& t : c4.types) {
    total += t.members.size();
    EXPECT_EQ(t.representative, t.members.front());
  }
  EXPECT_EQ(total, c4.search.solutions.size());
}

TEST(Unital, SubgroupsOfOrderQPlusOne) {
  for (auto [p, e] : {Order{3, 1}, Order{2, 2}, Order{5, 1}}) {
    const SL2 g(p, e);
    const auto subs = subgroups_of_order(g, g.q() + 1);
    ASSERT_FALSE(subs.empty());
    for (const auto& s : subs) EXPECT_TRUE(is_cyclic(g, s)) << g.q();
  }
  // SL(2,7) holds quaternion subgroups of order 8.
  const SL2 g7(7, 1);
  const auto subs7 = subgroups_of_order(g7, 8);
  EXPECT_TRUE(std::any_of(subs7.begin(), subs7.end(), [&](const Subgroup& s) { return !is_cyclic(g7, s); }));
}

TEST(Unital, SearchBudget) {
  const SL2 g(2, 2);
  const auto s = cyclic_subgroup(g, 5);
  const auto cut = search_d_sets(g, s, {3});
  EXPECT_FALSE(cut.complete);
}

TEST(Unital, Errors) {
  const auto& c = test::context(2, 2);
  const auto& g = *c.g;
  try {
    quotient_set(g, std::vector<Point>{g.one()});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::BadBlockSize);
  }
  auto broken = c.search.solutions.front();
  broken[0] = broken[1];
  try {
    AffineUnital u(g, c.s, broken);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::AxiomViolation);
  }
  Design d = c.unitals[0].design();
  std::swap(d.blocks.front().back(), d.blocks.back().back());
  d.canonicalize();
  EXPECT_THROW(AffineUnital::from_design(g, d), Error);
  EXPECT_THROW(cyclic_subgroup(g, 7), Error);
}

}  // namespace
}  // namespace slu
