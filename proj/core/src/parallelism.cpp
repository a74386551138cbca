#include "slu/parallelism.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

#include "slu/error.hpp"

namespace slu {

Parallelism Parallelism::from_labels(std::span<const std::uint32_t> labels) {
  Parallelism p;
  p.class_of_.resize(labels.size());
  std::map<std::uint32_t, std::uint32_t> rename;
  for (std::size_t b = 0; b < labels.size(); ++b) {
    auto [it, fresh] = rename.emplace(labels[b], static_cast<std::uint32_t>(rename.size()));
    p.class_of_[b] = it->second;
  }
  p.classes_ = rename.size();
  return p;
}

Parallelism Parallelism::from_classes(std::size_t block_count,
                                      const std::vector<std::vector<BlockId>>& classes) {
  std::vector<std::uint32_t> labels(block_count, ~0u);
  for (std::size_t c = 0; c < classes.size(); ++c)
    for (BlockId b : classes[c]) {
      if (b >= block_count || labels[b] != ~0u)
        throw Error(ErrorKind::InvalidParallelism, "block " + std::to_string(b) +
                                                       " is missing from the universe or repeated");
      labels[b] = static_cast<std::uint32_t>(c);
    }
  for (auto l : labels)
    if (l == ~0u) throw Error(ErrorKind::InvalidParallelism, "some short block lies in no class");
  return from_labels(labels);
}

std::vector<std::vector<BlockId>> Parallelism::classes() const {
  std::vector<std::vector<BlockId>> out(classes_);
  for (BlockId b = 0; b < class_of_.size(); ++b) out[class_of_[b]].push_back(b);
  return out;
}

ParallelismReport verify_parallelism(const SL2& g, const std::vector<std::vector<BlockId>>& classes) {
  ParallelismReport rep;
  auto fail = [&](std::string why) {
    rep.ok = false;
    rep.violation = std::move(why);
    return rep;
  };
  const std::size_t q = g.q();
  if (classes.size() != q + 1)
    return fail("expected " + std::to_string(q + 1) + " classes, found " +
                std::to_string(classes.size()));
  std::vector<std::int64_t> seen_block(g.block_count(), -1);
  for (std::size_t c = 0; c < classes.size(); ++c) {
    if (classes[c].size() != q * q - 1)
      return fail("class " + std::to_string(c) + " has " + std::to_string(classes[c].size()) +
                  " blocks, expected " + std::to_string(q * q - 1));
    std::vector<std::int64_t> owner(g.order(), -1);
    for (BlockId b : classes[c]) {
      if (b >= g.block_count()) return fail("block id out of range");
      if (seen_block[b] >= 0) {
        rep.witness = {b};
        return fail("block occurs in classes " + std::to_string(seen_block[b]) + " and " +
                    std::to_string(c));
      }
      seen_block[b] = static_cast<std::int64_t>(c);
      for (Point x : g.block_points(b)) {
        if (owner[x] >= 0) {
          rep.witness = {static_cast<BlockId>(owner[x]), b};
          rep.point = x;
          return fail("blocks in class " + std::to_string(c) + " intersect");
        }
        owner[x] = b;
      }
    }
  }
  for (BlockId b = 0; b < g.block_count(); ++b)
    if (seen_block[b] < 0) {
      rep.witness = {b};
      return fail("short block lies in no class");
    }
  return rep;
}

ParallelismReport verify_parallelism(const SL2& g, const Parallelism& pi) {
  if (pi.block_count() != g.block_count()) {
    ParallelismReport rep;
    rep.ok = false;
    rep.violation = "parallelism is over a different block universe";
    return rep;
  }
  return verify_parallelism(g, pi.classes());
}

Parallelism flat(const SL2& g) {
  std::vector<std::uint32_t> labels(g.block_count());
  for (BlockId b = 0; b < labels.size(); ++b)
    labels[b] = static_cast<std::uint32_t>(g.block_right_sylow(b));
  return Parallelism::from_labels(labels);
}

Parallelism natural(const SL2& g) {
  std::vector<std::uint32_t> labels(g.block_count());
  for (BlockId b = 0; b < labels.size(); ++b)
    labels[b] = static_cast<std::uint32_t>(g.block_left_sylow(b));
  return Parallelism::from_labels(labels);
}

std::vector<char> omega(const SL2& g, OmegaMode mode) {
  const Field& f = g.field();
  if (mode == OmegaMode::Odd && f.p() == 2)
    throw Error(ErrorKind::BadMode, "odd-mode Omega needs odd q");
  if (mode == OmegaMode::Square && !f.has_half_subfield())
    throw Error(ErrorKind::BadMode, "square-mode Omega needs a square order");
  std::vector<char> in(g.order(), 0);
  for (Point x = 0; x < g.order(); ++x) {
    const FieldElem c = g.elem(x).c;
    in[x] = mode == OmegaMode::Odd ? f.is_square(c) : f.in_subfield(c);
  }
  return in;
}

std::vector<BlockId> omega_class(const SL2& g, OmegaMode mode, bool primed) {
  const auto in = omega(g, mode);
  std::vector<BlockId> a;
  for (Point x = 0; x < g.order(); ++x)
    a.push_back((in[x] != 0) != primed ? g.right_coset(0, x) : g.left_coset(0, x));
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  return a;
}

namespace {

// Labels every block by the image of `a` containing it; images come from
// map_block under each map in turn.
template <class ImageOf>
Parallelism orbit_partition(const SL2& g, const std::vector<BlockId>& a, ImageOf&& image_of,
                            std::size_t maps) {
  std::set<std::vector<BlockId>> images;
  for (std::size_t m = 0; m < maps; ++m) {
    std::vector<BlockId> img;
    img.reserve(a.size());
    for (BlockId b : a) img.push_back(image_of(m, b));
    std::sort(img.begin(), img.end());
    images.insert(std::move(img));
  }
  std::vector<std::vector<BlockId>> classes(images.begin(), images.end());
  const auto rep = verify_parallelism(g, classes);
  if (!rep.ok) throw Error(ErrorKind::AxiomViolation, "construction is not a parallelism: " + rep.violation);
  return Parallelism::from_classes(g.block_count(), classes);
}

}  // namespace

Parallelism pi_odd(const SL2& g, bool primed) {
  if (g.field().p() == 2) throw Error(ErrorKind::EvenOrder, "pi_odd needs odd q");
  const auto a = omega_class(g, OmegaMode::Odd, primed);
  return orbit_partition(
      g, a,
      [&](std::size_t h, BlockId b) {
        return g.map_block(b, [&](Point x) { return g.conj(x, static_cast<Point>(h)); });
      },
      g.order());
}

Parallelism pi_sq(const SL2& g) {
  if (!g.field().has_half_subfield())
    throw Error(ErrorKind::NotSquareOrder, "pi_sq needs a square order");
  const auto a = omega_class(g, OmegaMode::Square, false);
  return orbit_partition(
      g, a,
      [&](std::size_t h, BlockId b) {
        return g.map_block(b, [&](Point x) { return theta_apply(g, static_cast<Point>(h), x); });
      },
      g.order());
}

Parallelism invert(const SL2& g, const Parallelism& pi) {
  std::vector<std::uint32_t> labels(pi.block_count());
  for (BlockId b = 0; b < labels.size(); ++b)
    labels[g.map_block(b, [&](Point x) { return g.inv(x); })] = pi.class_of(b);
  return Parallelism::from_labels(labels);
}

Parallelism image(const ArGroup& ar, const Parallelism& pi, std::size_t alpha, Point h) {
  std::vector<std::uint32_t> labels(pi.block_count());
  for (BlockId b = 0; b < labels.size(); ++b) labels[ar.apply_block(alpha, h, b)] = pi.class_of(b);
  return Parallelism::from_labels(labels);
}

Parallelism image(const ArGroup& ar, const Parallelism& pi, const ArElem& t) {
  return image(ar, pi, ar.alpha_of(t), t.rmul);
}

bool maps_to(const ArGroup& ar, const Parallelism& pi, const Parallelism& target, std::size_t alpha,
             Point h) {
  if (pi.class_count() != target.class_count()) return false;
  std::vector<std::uint32_t> to(pi.class_count(), ~0u);
  for (BlockId b = 0; b < pi.block_count(); ++b) {
    const std::uint32_t c = pi.class_of(b);
    const std::uint32_t t = target.class_of(ar.apply_block(alpha, h, b));
    if (to[c] == ~0u)
      to[c] = t;
    else if (to[c] != t)
      return false;
  }
  return true;
}

std::size_t class_sylow(const SL2& g, const Parallelism& pi, std::size_t c) {
  for (std::size_t s = 0; s < g.sylows().size(); ++s)
    if (pi.class_of(g.right_coset(s, g.one())) == c) return s;
  throw Error(ErrorKind::InvalidParallelism, "class contains no subgroup block");
}

std::vector<std::vector<BlockId>> enumerate_spreads(const SL2& g, const EnumerationOptions& options,
                                                    bool* complete) {
  ExactCover ec(g.order());
  for (BlockId b = 0; b < g.block_count(); ++b) ec.add_row(g.block_points(b));
  auto res = ec.solve({options.node_budget, options.threads});
  if (complete) *complete = res.complete;
  return std::move(res.solutions);
}

EnumerationResult enumerate_parallelisms(const SL2& g, const EnumerationOptions& options) {
  EnumerationResult out;
  bool complete = true;
  const auto spreads = enumerate_spreads(g, options, &complete);
  out.spread_count = spreads.size();
  if (!complete) {
    out.complete = false;
    return out;
  }
  ExactCover ec(g.block_count());
  for (const auto& s : spreads) ec.add_row(s);
  auto res = ec.solve({options.node_budget, options.threads});
  out.nodes = res.nodes;
  out.complete = res.complete;
  for (const auto& sol : res.solutions) {
    std::vector<std::vector<BlockId>> classes;
    for (auto r : sol) classes.push_back(spreads[r]);
    out.parallelisms.push_back(Parallelism::from_classes(g.block_count(), classes));
  }
  std::sort(out.parallelisms.begin(), out.parallelisms.end());
  return out;
}

std::vector<ArElem> stabilizer(const ArGroup& ar, const Parallelism& pi) {
  std::vector<ArElem> out;
  ar.for_each([&](std::size_t alpha, Point h) {
    if (maps_to(ar, pi, pi, alpha, h)) out.push_back(ar.element(alpha, h));
  });
  return out;
}

std::optional<ArElem> equivalence(const ArGroup& ar, const Parallelism& a, const Parallelism& b) {
  const std::size_t n = ar.group().order();
  for (std::size_t alpha = 0; alpha < ar.semilinear_count(); ++alpha)
    for (Point h = 0; h < n; ++h)
      if (maps_to(ar, a, b, alpha, h)) return ar.element(alpha, h);
  return std::nullopt;
}

std::vector<ArElem> ar_generators(const ArGroup& ar) {
  const SL2& g = ar.group();
  const Field& f = g.field();
  std::vector<ArElem> gens;
  for (unsigned i = 0; i < f.e(); ++i) {
    const FieldElem x = f.exp(i);
    for (const Mat2& m : {Mat2{f.one(), x, f.zero(), f.one()}, Mat2{f.one(), f.zero(), x, f.one()}}) {
      gens.push_back(ar.gamma(m));
      gens.push_back(ar.rho(g.index(m)));
    }
  }
  gens.push_back(ar.gamma(Mat2{f.one(), f.zero(), f.zero(), f.generator()}));
  if (f.e() > 1) gens.push_back(ar.frobenius(1));
  return gens;
}

std::vector<Parallelism> orbit(const ArGroup& ar, const Parallelism& pi, std::span<const ArElem> gens) {
  std::set<Parallelism> seen{pi};
  std::deque<Parallelism> queue{pi};
  while (!queue.empty()) {
    const Parallelism cur = std::move(queue.front());
    queue.pop_front();
    for (const auto& t : gens) {
      Parallelism img = image(ar, cur, t);
      if (seen.insert(img).second) queue.push_back(std::move(img));
    }
  }
  return {seen.begin(), seen.end()};
}

std::vector<std::vector<std::size_t>> parallelism_orbits(const ArGroup& ar,
                                                         std::span<const Parallelism> items,
                                                         std::span<const ArElem> group) {
  std::map<Parallelism, std::size_t> index;
  for (std::size_t i = 0; i < items.size(); ++i) index.emplace(items[i], i);
  std::vector<std::size_t> parent(items.size());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < items.size(); ++i)
    for (const auto& t : group) {
      auto it = index.find(image(ar, items[i], t));
      if (it == index.end())
        throw Error(ErrorKind::InvalidParallelism, "parallelism list is not closed under the group");
      const std::size_t a = find(i), b = find(it->second);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  std::map<std::size_t, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < items.size(); ++i) groups[find(i)].push_back(i);
  std::vector<std::vector<std::size_t>> out;
  for (auto& [root, members] : groups) out.push_back(std::move(members));
  return out;
}

std::size_t ClassCensus::right_of(std::size_t s) const {
  std::size_t n = 0;
  for (const auto& [k, c] : right_left)
    if (k.first == s) n += c;
  return n;
}

std::size_t ClassCensus::left_of(std::size_t s) const {
  std::size_t n = 0;
  for (const auto& [k, c] : right_left)
    if (k.second == s) n += c;
  return n;
}

std::size_t ClassCensus::both(std::size_t r, std::size_t l) const {
  auto it = right_left.find({r, l});
  return it == right_left.end() ? 0 : it->second;
}

std::vector<ClassCensus> class_structure_report(const SL2& g, const Parallelism& pi) {
  std::vector<ClassCensus> out(pi.class_count());
  for (std::size_t c = 0; c < out.size(); ++c) out[c].sylow = class_sylow(g, pi, c);
  for (BlockId b = 0; b < pi.block_count(); ++b)
    ++out[pi.class_of(b)].right_left[{g.block_right_sylow(b), g.block_left_sylow(b)}];
  return out;
}

std::size_t bar_sylow(const SL2& g, std::size_t s) {
  const auto& m = g.sylows()[s].members;
  const Point x = m[0] == g.one() ? m[1] : m[0];
  return static_cast<std::size_t>(g.sylow_of(g.index(g.ops().bar(g.elem(x)))));
}

}  // namespace slu
