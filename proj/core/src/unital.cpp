#include "slu/unital.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "slu/error.hpp"
#include "slu/iso.hpp"

namespace slu {

std::vector<Point> quotient_set(const SL2& g, std::span<const Point> d) {
  if (d.size() != g.q() + 1)
    throw Error(ErrorKind::BadBlockSize, "D must have q+1 elements");
  if (std::find(d.begin(), d.end(), g.one()) == d.end())
    throw Error(ErrorKind::BadBlockSize, "D must contain the identity");
  std::vector<Point> out;
  for (Point x : d)
    for (Point y : d)
      if (x != y) out.push_back(g.mul(x, g.inv(y)));
  std::sort(out.begin(), out.end());
  return out;
}

bool verify_Q(const SL2& g, std::span<const Point> d) {
  auto qs = quotient_set(g, d);
  return std::adjacent_find(qs.begin(), qs.end()) == qs.end() &&
         qs.size() == std::size_t{g.q()} * (g.q() + 1);
}

bool verify_P(const SL2& g, const Subgroup& s, const std::vector<std::vector<Point>>& d_sets) {
  std::vector<int> cover(g.order(), 0);
  for (Point x : s.members) ++cover[x];
  for (const auto& t : g.sylows())
    for (Point x : t.members) ++cover[x];
  for (const auto& d : d_sets)
    for (Point x : quotient_set(g, d)) ++cover[x];
  for (Point x = 0; x < g.order(); ++x)
    if (x != g.one() && cover[x] != 1) return false;
  return true;
}

AffineUnital::AffineUnital(const SL2& g, Subgroup s, std::vector<std::vector<Point>> d_sets)
    : g_(&g), s_(std::move(s)), d_sets_(std::move(d_sets)) {
  const std::size_t n = g.order();
  const std::size_t q = g.q();
  if (s_.order() != q + 1 || !s_.contains(g.one()))
    throw Error(ErrorKind::BadBlockSize, "S must be a subgroup of order q+1");
  for (Point x : s_.members)
    for (Point y : s_.members)
      if (!s_.contains(g.mul(x, y))) throw Error(ErrorKind::AxiomViolation, "S is not a subgroup");
  for (auto& d : d_sets_) {
    std::sort(d.begin(), d.end());
    if (!verify_Q(g, d)) throw Error(ErrorKind::AxiomViolation, "a D set violates the quotient condition");
  }
  std::sort(d_sets_.begin(), d_sets_.end());
  if (!verify_P(g, s_, d_sets_))
    throw Error(ErrorKind::AxiomViolation, "quotient sets do not partition the group");

  std::set<std::vector<Point>> blocks;
  for (Point x = 0; x < n; ++x) {
    std::vector<Point> b;
    for (Point y : s_.members) b.push_back(g.mul(y, x));
    std::sort(b.begin(), b.end());
    blocks.insert(std::move(b));
    for (const auto& d : d_sets_) {
      std::vector<Point> c;
      for (Point y : d) c.push_back(g.mul(y, x));
      std::sort(c.begin(), c.end());
      blocks.insert(std::move(c));
    }
  }
  long_.assign(blocks.begin(), blocks.end());

  join_.assign(n * n, -1);
  for (std::size_t i = 0; i < long_.size(); ++i)
    for (Point x : long_[i])
      for (Point y : long_[i])
        if (x != y) join_[x * n + y] = static_cast<std::int64_t>(i);

  const auto rep = verify_affine_axioms(design(), static_cast<unsigned>(q));
  if (!rep.ok) {
    std::string w;
    for (auto x : rep.witness) w += " " + std::to_string(x);
    throw Error(ErrorKind::AxiomViolation, rep.violation + " (witness:" + w + ")");
  }
}

Design AffineUnital::design() const {
  Design d;
  d.v = static_cast<std::uint32_t>(g_->order());
  d.infinite_from = d.v;
  d.blocks = long_;
  for (BlockId b = 0; b < g_->block_count(); ++b) d.blocks.push_back(g_->block_points(b));
  d.canonicalize();
  return d;
}

bool AffineUnital::is_automorphism(const ArGroup& ar, std::size_t alpha, Point h) const {
  std::vector<Point> img(g_->q() + 1);
  for (const auto& b : long_) {
    for (std::size_t i = 0; i < b.size(); ++i) img[i] = ar.apply(alpha, h, b[i]);
    const std::size_t target = long_block_through(img[0], img[1]);
    if (target == kShort) return false;
    for (std::size_t i = 2; i < img.size(); ++i)
      if (long_block_through(img[0], img[i]) != target) return false;
  }
  return true;
}

namespace {

// Least of the translates D d^{-1}, each sorted.
std::vector<Point> least_translate(const SL2& g, std::span<const Point> d) {
  std::vector<Point> best;
  for (Point t : d) {
    std::vector<Point> c;
    const Point ti = g.inv(t);
    for (Point x : d) c.push_back(g.mul(x, ti));
    std::sort(c.begin(), c.end());
    if (best.empty() || c < best) best = std::move(c);
  }
  return best;
}

}  // namespace

AffineUnital AffineUnital::from_design(const SL2& g, const Design& d) {
  const std::size_t q = g.q();
  if (d.v != g.order()) throw Error(ErrorKind::AxiomViolation, "point count differs from #SL(2,q)");
  std::vector<std::vector<Point>> shorts, longs;
  for (const auto& b : d.blocks) {
    std::vector<Point> s(b.begin(), b.end());
    std::sort(s.begin(), s.end());
    if (s.size() == q)
      shorts.push_back(std::move(s));
    else if (s.size() == q + 1)
      longs.push_back(std::move(s));
    else
      throw Error(ErrorKind::AxiomViolation, "block size is neither q nor q+1");
  }
  std::sort(shorts.begin(), shorts.end());
  if (shorts.size() != g.block_count())
    throw Error(ErrorKind::AxiomViolation, "short blocks are not the coset universe");
  for (BlockId b = 0; b < g.block_count(); ++b)
    if (shorts[b] != g.block_points(b))
      throw Error(ErrorKind::AxiomViolation, "short blocks are not the coset universe");

  std::optional<Subgroup> s;
  std::set<std::vector<Point>> ds;
  for (const auto& b : longs) {
    if (!std::binary_search(b.begin(), b.end(), g.one())) continue;
    bool closed = true;
    for (Point x : b)
      for (Point y : b)
        if (!std::binary_search(b.begin(), b.end(), g.mul(x, y))) closed = false;
    if (closed && !s)
      s = Subgroup{b};
    else
      ds.insert(least_translate(g, b));
  }
  if (!s) throw Error(ErrorKind::AxiomViolation, "no long block through 1 is a subgroup");
  AffineUnital u(g, *s, {ds.begin(), ds.end()});
  std::sort(longs.begin(), longs.end());
  if (longs != u.long_blocks())
    throw Error(ErrorKind::AxiomViolation, "long blocks are not the S and D translates");
  return u;
}

Subgroup cyclic_subgroup(const SL2& g, std::size_t order) {
  for (Point x = 0; x < g.order(); ++x) {
    if (g.element_order(x) != order) continue;
    Subgroup s;
    Point y = g.one();
    for (std::size_t i = 0; i < order; ++i) {
      s.members.push_back(y);
      y = g.mul(y, x);
    }
    std::sort(s.members.begin(), s.members.end());
    return s;
  }
  throw Error(ErrorKind::BadMode, "no element of order " + std::to_string(order));
}

bool is_cyclic(const SL2& g, const Subgroup& s) {
  for (Point x : s.members)
    if (g.element_order(x) == s.order()) return true;
  return false;
}

std::vector<Subgroup> subgroups_of_order(const SL2& g, std::size_t order) {
  std::vector<Point> cand;
  for (Point x = 0; x < g.order(); ++x)
    if (order % g.element_order(x) == 0) cand.push_back(x);
  std::set<std::vector<Point>> found;
  std::vector<char> in(g.order(), 0);
  for (std::size_t i = 0; i < cand.size(); ++i)
    for (std::size_t j = i; j < cand.size(); ++j) {
      std::vector<Point> el{g.one()};
      std::fill(in.begin(), in.end(), 0);
      in[g.one()] = 1;
      bool too_big = false;
      for (std::size_t k = 0; k < el.size() && !too_big; ++k)
        for (Point gen : {cand[i], cand[j]}) {
          const Point p = g.mul(el[k], gen);
          if (in[p]) continue;
          if (el.size() == order) {
            too_big = true;
            break;
          }
          in[p] = 1;
          el.push_back(p);
        }
      if (too_big || el.size() != order) continue;
      std::sort(el.begin(), el.end());
      found.insert(std::move(el));
    }
  std::vector<Subgroup> out;
  for (const auto& f : found) out.push_back(Subgroup{f});
  return out;
}

DSearchResult search_d_sets(const SL2& g, const Subgroup& s, const DSearchOptions& options) {
  const std::size_t n = g.order();
  const std::size_t q = g.q();
  DSearchResult out;

  std::vector<std::int64_t> r_index(n, -1);
  std::vector<Point> residual;
  {
    std::vector<char> used(n, 0);
    used[g.one()] = 1;
    for (Point x : s.members) used[x] = 1;
    for (const auto& t : g.sylows())
      for (Point x : t.members) used[x] = 1;
    for (Point x = 0; x < n; ++x)
      if (!used[x]) {
        r_index[x] = static_cast<std::int64_t>(residual.size());
        residual.push_back(x);
      }
  }

  // Cover the least uncovered residual element z first. Its D is the unique
  // translate containing 1 and z, so every solution is reached exactly once.
  std::vector<Point> quot(n * n);
  for (Point x = 0; x < n; ++x)
    for (Point y = 0; y < n; ++y) quot[x * n + y] = g.mul(x, g.inv(y));
  std::vector<char> covered(n, 0);
  std::vector<Point> marks;
  std::vector<std::vector<Point>> family;
  std::size_t uncovered = residual.size();

  auto mark_quotients = [&](const std::vector<Point>& d, Point x) {
    for (Point y : d)
      for (Point z : {quot[x * n + y], quot[y * n + x]}) {
        if (r_index[z] < 0 || covered[z]) return false;
        covered[z] = 1;
        marks.push_back(z);
      }
    return true;
  };
  auto unmark_to = [&](std::size_t mark0) {
    while (marks.size() > mark0) {
      covered[marks.back()] = 0;
      marks.pop_back();
    }
  };

  auto cover = [&](auto&& cover_self) -> void {
    if (options.node_budget && out.nodes >= options.node_budget) {
      out.complete = false;
      return;
    }
    ++out.nodes;
    if (uncovered == 0) {
      std::vector<std::vector<Point>> sol;
      for (const auto& d : family) sol.push_back(least_translate(g, d));
      std::sort(sol.begin(), sol.end());
      out.solutions.push_back(std::move(sol));
      return;
    }
    Point z = 0;
    for (Point x : residual)
      if (!covered[x]) {
        z = x;
        break;
      }
    std::vector<Point> d{g.one()};
    const std::size_t base = marks.size();
    if (!mark_quotients(d, z)) {
      unmark_to(base);
      return;
    }
    d.push_back(z);
    auto extend = [&](auto&& self, std::size_t start) -> void {
      if (d.size() == q + 1) {
        ++out.candidates;
        std::vector<Point> sorted = d;
        std::sort(sorted.begin(), sorted.end());
        family.push_back(std::move(sorted));
        uncovered -= q * (q + 1);
        cover_self(cover_self);
        uncovered += q * (q + 1);
        family.pop_back();
        return;
      }
      for (std::size_t i = start; i < residual.size() && out.complete; ++i) {
        const Point x = residual[i];
        if (x == z) continue;
        const std::size_t mark0 = marks.size();
        if (mark_quotients(d, x)) {
          d.push_back(x);
          self(self, i + 1);
          d.pop_back();
        }
        unmark_to(mark0);
      }
    };
    extend(extend, 0);
    unmark_to(base);
  };
  cover(cover);
  std::sort(out.solutions.begin(), out.solutions.end());
  return out;
}

std::vector<ArElem> aut_affine(const ArGroup& ar, const AffineUnital& u) {
  if (ar.order() > ArGroup::kMaxEnumerate)
    throw Error(ErrorKind::TooLarge, "automorphism filter limited to small q");
  std::vector<ArElem> out;
  ar.for_each([&](std::size_t alpha, Point h) {
    if (u.is_automorphism(ar, alpha, h)) out.push_back(ar.element(alpha, h));
  });
  return out;
}

std::vector<UnitalType> classify_unitals(const ArGroup& ar, const Subgroup& s,
                                         const std::vector<std::vector<std::vector<Point>>>& solutions) {
  const SL2& g = ar.group();
  std::vector<AffineUnital> unitals;
  std::map<std::vector<std::vector<Point>>, std::size_t> key;
  for (std::size_t i = 0; i < solutions.size(); ++i) {
    unitals.emplace_back(g, s, solutions[i]);
    key.emplace(unitals.back().long_blocks(), i);
  }

  std::vector<std::size_t> normalizing;
  for (std::size_t alpha = 0; alpha < ar.semilinear_count(); ++alpha) {
    const auto perm = ar.semilinear_perm(alpha);
    bool ok = true;
    for (Point x : s.members)
      if (!s.contains(perm[x])) ok = false;
    if (ok) normalizing.push_back(alpha);
  }

  std::vector<std::size_t> parent(solutions.size());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  };
  for (std::size_t i = 0; i < unitals.size(); ++i)
    for (std::size_t alpha : normalizing) {
      const auto perm = ar.semilinear_perm(alpha);
      std::vector<std::vector<Point>> img;
      for (const auto& b : unitals[i].long_blocks()) {
        std::vector<Point> c;
        for (Point x : b) c.push_back(perm[x]);
        std::sort(c.begin(), c.end());
        img.push_back(std::move(c));
      }
      std::sort(img.begin(), img.end());
      if (auto it = key.find(img); it != key.end()) unite(i, it->second);
    }

  std::map<std::size_t, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < solutions.size(); ++i) groups[find(i)].push_back(i);
  std::vector<UnitalType> types;
  for (auto& [root, members] : groups) {
    UnitalType t;
    t.members = std::move(members);
    t.representative = t.members.front();
    t.aut_order = aut_affine(ar, unitals[t.representative]).size();
    types.push_back(std::move(t));
  }

  // Classes with equal automorphism order may still be isomorphic.
  for (std::size_t i = 0; i < types.size(); ++i)
    for (std::size_t j = i + 1; j < types.size();) {
      if (types[i].aut_order == types[j].aut_order &&
          isomorphic(unitals[types[i].representative].design(),
                     unitals[types[j].representative].design())) {
        types[i].members.insert(types[i].members.end(), types[j].members.begin(),
                                types[j].members.end());
        std::sort(types[i].members.begin(), types[i].members.end());
        types.erase(types.begin() + static_cast<std::ptrdiff_t>(j));
      } else {
        ++j;
      }
    }

  std::sort(types.begin(), types.end(), [](const UnitalType& a, const UnitalType& b) {
    if (a.aut_order != b.aut_order) return a.aut_order > b.aut_order;
    return a.representative < b.representative;
  });
  if (!types.empty()) types.front().classical = true;
  return types;
}

}  // namespace slu
