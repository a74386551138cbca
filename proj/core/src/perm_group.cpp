#include "slu/perm_group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

#include "slu/error.hpp"

namespace slu {

Perm identity_perm(std::size_t n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0u);
  return p;
}

Perm compose(const Perm& a, const Perm& b) {
  Perm r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = b[a[i]];
  return r;
}

Perm inverse(const Perm& a) {
  Perm r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[a[i]] = static_cast<std::uint32_t>(i);
  return r;
}

bool is_identity(const Perm& a) noexcept {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != i) return false;
  return true;
}

std::size_t perm_order(const Perm& a) {
  std::vector<char> seen(a.size(), 0);
  std::size_t result = 1;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = a[j]) {
      seen[j] = 1;
      ++len;
    }
    result = std::lcm(result, len);
  }
  return result;
}

std::vector<std::vector<std::uint32_t>> orbits(std::size_t n, std::span<const Perm> gens) {
  std::vector<std::uint32_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0u);
  auto find = [&](std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& g : gens)
    for (std::uint32_t x = 0; x < n; ++x) {
      const std::uint32_t a = find(x), b = find(g[x]);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<std::int64_t> slot(n, -1);
  for (std::uint32_t x = 0; x < n; ++x) {
    const std::uint32_t r = find(x);
    if (slot[r] < 0) {
      slot[r] = static_cast<std::int64_t>(out.size());
      out.emplace_back();
    }
    out[static_cast<std::size_t>(slot[r])].push_back(x);
  }
  return out;
}

// ---------------------------------------------------------------------------
// PermGroup

PermGroup::PermGroup(std::size_t degree, std::span<const Perm> gens)
    : n_(degree), reps_(degree, std::vector<std::int32_t>(degree, -1)), strong_(degree) {
  store_.push_back(identity_perm(n_));
  store_inv_.push_back(identity_perm(n_));
  for (std::size_t k = 0; k < n_; ++k) reps_[k][k] = 0;
  for (const auto& g : gens) add(g);
}

bool PermGroup::sift(Perm g, std::size_t k) const {
  for (; k < n_; ++k) {
    if (is_identity(g)) return true;
    const std::int32_t r = reps_[k][g[k]];
    if (r < 0) return false;
    if (r != 0) g = compose(g, store_inv_[static_cast<std::size_t>(r)]);
  }
  return is_identity(g);
}

bool PermGroup::contains(const Perm& g) const { return g.size() == n_ && sift(g, 0); }

void PermGroup::add(const Perm& g) {
  if (n_ > 0) extend(0, g);
}

// Knuth's procedure A: make g a member of the level-k group.
void PermGroup::extend(std::size_t k, const Perm& g) {
  if (k >= n_ || sift(g, k)) return;
  strong_[k].push_back(g);
  std::vector<std::size_t> reps;
  for (std::size_t j = 0; j < n_; ++j)
    if (reps_[k][j] >= 0) reps.push_back(static_cast<std::size_t>(reps_[k][j]));
  for (std::size_t r : reps) enter(k, compose(store_[r], g));
}

// Knuth's procedure B, with an explicit work list.
void PermGroup::enter(std::size_t k, const Perm& g0) {
  std::vector<Perm> work{g0};
  while (!work.empty()) {
    Perm g = std::move(work.back());
    work.pop_back();
    const std::uint32_t j = g[k];
    const std::int32_t r = reps_[k][j];
    if (r < 0) {
      reps_[k][j] = static_cast<std::int32_t>(store_.size());
      store_inv_.push_back(inverse(g));
      store_.push_back(g);
      for (const auto& s : strong_[k]) work.push_back(compose(g, s));
    } else {
      extend(k + 1, compose(g, store_inv_[static_cast<std::size_t>(r)]));
    }
  }
}

std::uint64_t PermGroup::order() const {
  std::uint64_t result = 1;
  for (std::size_t k = 0; k < n_; ++k) {
    std::uint64_t c = 0;
    for (auto r : reps_[k]) c += r >= 0;
    result *= c;
  }
  return result;
}

// ---------------------------------------------------------------------------
// Fingerprints

std::string to_string(const GroupFingerprint& fp) {
  std::ostringstream os;
  os << "order=" << fp.order << " abelian=" << (fp.abelian ? 1 : 0) << " center=" << fp.center_order
     << " derived=" << fp.derived_order << " exponent=" << fp.exponent << " element_orders={";
  bool first = true;
  for (auto [o, c] : fp.element_orders) {
    os << (first ? "" : ",") << o << ":" << c;
    first = false;
  }
  os << "}";
  return os.str();
}

FiniteGroup::FiniteGroup(std::size_t degree, std::span<const Perm> gens) : n_(degree) {
  for (const auto& g : gens)
    if (!is_identity(g)) gens_.push_back(g);
  elems_.push_back(identity_perm(n_));
  index_.emplace(elems_[0], 0);
  for (std::size_t i = 0; i < elems_.size(); ++i) {
    for (const auto& g : gens_) {
      Perm p = compose(elems_[i], g);
      if (index_.count(p)) continue;
      if (elems_.size() >= kMaxElements)
        throw Error(ErrorKind::TooLarge, "group closure exceeds " + std::to_string(kMaxElements));
      index_.emplace(p, elems_.size());
      elems_.push_back(std::move(p));
    }
  }
}

std::optional<std::size_t> FiniteGroup::index_of(const Perm& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool FiniteGroup::is_abelian() const {
  for (std::size_t i = 0; i < gens_.size(); ++i)
    for (std::size_t j = i + 1; j < gens_.size(); ++j)
      if (compose(gens_[i], gens_[j]) != compose(gens_[j], gens_[i])) return false;
  return true;
}

std::vector<std::size_t> FiniteGroup::center() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < elems_.size(); ++i) {
    bool central = true;
    for (const auto& g : gens_)
      if (compose(elems_[i], g) != compose(g, elems_[i])) {
        central = false;
        break;
      }
    if (central) out.push_back(i);
  }
  return out;
}

std::uint64_t FiniteGroup::derived_order() const {
  std::vector<Perm> comms;
  for (const auto& a : gens_)
    for (const auto& b : gens_) {
      Perm c = compose(compose(inverse(a), inverse(b)), compose(a, b));
      if (!is_identity(c)) comms.push_back(std::move(c));
    }
  PermGroup d(n_, comms);
  for (std::size_t i = 0; i < comms.size(); ++i) {
    for (const auto& g : gens_) {
      Perm c = compose(compose(inverse(g), comms[i]), g);
      if (!d.contains(c)) {
        d.add(c);
        comms.push_back(std::move(c));
      }
    }
  }
  return d.order();
}

GroupFingerprint FiniteGroup::fingerprint() const {
  GroupFingerprint fp;
  fp.order = elems_.size();
  fp.abelian = is_abelian();
  fp.center_order = center().size();
  fp.derived_order = derived_order();
  fp.exponent = 1;
  for (const auto& e : elems_) {
    const std::uint64_t o = perm_order(e);
    ++fp.element_orders[o];
    fp.exponent = std::lcm(fp.exponent, o);
  }
  return fp;
}

void FiniteGroup::ensure_table() const {
  if (!table_.empty()) return;
  const std::size_t m = elems_.size();
  if (m > kMaxTable)
    throw Error(ErrorKind::TooLarge, "multiplication table limited to " + std::to_string(kMaxTable));
  table_.resize(m * m);
  inv_.resize(m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      const std::size_t k = index_.at(compose(elems_[i], elems_[j]));
      table_[i * m + j] = static_cast<std::uint32_t>(k);
      if (k == 0) inv_[i] = static_cast<std::uint32_t>(j);
    }
}

std::size_t FiniteGroup::mul(std::size_t a, std::size_t b) const {
  ensure_table();
  return table_[a * elems_.size() + b];
}

std::size_t FiniteGroup::inv(std::size_t a) const {
  ensure_table();
  return inv_[a];
}

std::vector<std::size_t> FiniteGroup::generated(std::span<const std::size_t> gens) const {
  ensure_table();
  std::vector<char> in(elems_.size(), 0);
  std::vector<std::size_t> out{0};
  in[0] = 1;
  for (std::size_t i = 0; i < out.size(); ++i)
    for (std::size_t g : gens) {
      const std::size_t p = mul(out[i], g);
      if (!in[p]) {
        in[p] = 1;
        out.push_back(p);
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

bool FiniteGroup::is_normal(std::span<const std::size_t> subgroup) const {
  ensure_table();
  std::vector<char> in(elems_.size(), 0);
  for (auto x : subgroup) in[x] = 1;
  for (const auto& g : gens_) {
    const std::size_t gi = *index_of(g);
    for (auto x : subgroup)
      if (!in[mul(mul(inv(gi), x), gi)]) return false;
  }
  return true;
}

std::vector<std::vector<std::size_t>> FiniteGroup::subgroups_of_order(std::size_t order) const {
  ensure_table();
  const std::size_t m = elems_.size();
  if (order == 0 || m % order != 0) return {};
  std::vector<std::size_t> cand;
  for (std::size_t i = 0; i < m; ++i)
    if (order % perm_order(elems_[i]) == 0) cand.push_back(i);

  std::set<std::vector<std::size_t>> found;
  auto closure = [&](std::size_t a, std::size_t b) {
    std::vector<char> in(m, 0);
    std::vector<std::size_t> out{0};
    in[0] = 1;
    for (std::size_t i = 0; i < out.size(); ++i)
      for (std::size_t g : {a, b}) {
        const std::size_t p = mul(out[i], g);
        if (!in[p]) {
          if (out.size() == order) return std::vector<std::size_t>{};
          in[p] = 1;
          out.push_back(p);
        }
      }
    if (out.size() != order) return std::vector<std::size_t>{};
    std::sort(out.begin(), out.end());
    return out;
  };
  for (std::size_t i = 0; i < cand.size(); ++i)
    for (std::size_t j = i; j < cand.size(); ++j) {
      auto s = closure(cand[i], cand[j]);
      if (!s.empty()) found.insert(std::move(s));
    }
  return {found.begin(), found.end()};
}

GroupFingerprint FiniteGroup::subgroup_fingerprint(std::span<const std::size_t> subgroup) const {
  std::vector<Perm> gens;
  for (auto x : subgroup) gens.push_back(elems_[x]);
  return FiniteGroup(n_, gens).fingerprint();
}

bool has_split_extension(const FiniteGroup& g, const GroupFingerprint& normal_fp,
                         const GroupFingerprint& complement_fp, bool direct) {
  if (normal_fp.order * complement_fp.order != g.order()) return false;
  std::vector<std::vector<std::size_t>> normals;
  for (auto& s : g.subgroups_of_order(normal_fp.order))
    if (g.is_normal(s) && g.subgroup_fingerprint(s) == normal_fp) normals.push_back(std::move(s));
  if (normals.empty()) return false;
  std::vector<std::vector<std::size_t>> complements;
  for (auto& s : g.subgroups_of_order(complement_fp.order))
    if (g.subgroup_fingerprint(s) == complement_fp) complements.push_back(std::move(s));
  for (const auto& n : normals)
    for (const auto& x : complements) {
      std::vector<std::size_t> common;
      std::set_intersection(n.begin(), n.end(), x.begin(), x.end(), std::back_inserter(common));
      if (common.size() != 1) continue;
      if (!direct) return true;
      bool commute = true;
      for (auto a : n) {
        for (auto b : x)
          if (g.mul(a, b) != g.mul(b, a)) {
            commute = false;
            break;
          }
        if (!commute) break;
      }
      if (commute) return true;
    }
  return false;
}

namespace reference {

FiniteGroup cyclic(std::size_t n) {
  Perm c(n);
  for (std::size_t i = 0; i < n; ++i) c[i] = static_cast<std::uint32_t>((i + 1) % n);
  return FiniteGroup(n, std::vector<Perm>{c});
}

FiniteGroup dihedral(std::size_t n) {
  Perm r(n), s(n);
  for (std::size_t i = 0; i < n; ++i) {
    r[i] = static_cast<std::uint32_t>((i + 1) % n);
    s[i] = static_cast<std::uint32_t>((n - i) % n);
  }
  return FiniteGroup(n, std::vector<Perm>{r, s});
}

FiniteGroup alternating4() {
  return FiniteGroup(4, std::vector<Perm>{{1, 2, 0, 3}, {1, 0, 3, 2}});
}

FiniteGroup frobenius20() {
  return FiniteGroup(5, std::vector<Perm>{{1, 2, 3, 4, 0}, {0, 2, 4, 1, 3}});
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  const std::size_t na = a.degree(), nb = b.degree();
  std::vector<Perm> gens;
  for (const auto& g : a.generators()) {
    Perm p = identity_perm(na + nb);
    for (std::size_t i = 0; i < na; ++i) p[i] = g[i];
    gens.push_back(std::move(p));
  }
  for (const auto& g : b.generators()) {
    Perm p = identity_perm(na + nb);
    for (std::size_t i = 0; i < nb; ++i) p[na + i] = static_cast<std::uint32_t>(na + g[i]);
    gens.push_back(std::move(p));
  }
  return FiniteGroup(na + nb, gens);
}

FiniteGroup elementary_abelian(std::size_t rank) {
  std::vector<Perm> gens;
  for (std::size_t r = 0; r < rank; ++r) {
    Perm p = identity_perm(2 * rank);
    std::swap(p[2 * r], p[2 * r + 1]);
    gens.push_back(std::move(p));
  }
  return FiniteGroup(2 * rank, gens);
}

}  // namespace reference

}  // namespace slu
