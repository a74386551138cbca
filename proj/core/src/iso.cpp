#include "slu/iso.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <span>
#include <utility>

#include "slu/error.hpp"

namespace slu {

namespace {

// Bipartite incidence graph; vertices 0..v-1 are points, v.. are blocks.
struct Graph {
  std::uint32_t v = 0;
  std::uint32_t n = 0;
  std::vector<std::uint32_t> offset;
  std::vector<std::uint32_t> adj;

  explicit Graph(const Design& d) : v(d.v), n(d.v + static_cast<std::uint32_t>(d.blocks.size())) {
    if (d.v > kMaxIsoPoints)
      throw Error(ErrorKind::TooLarge, "isomorphism engine limited to " + std::to_string(kMaxIsoPoints) +
                                           " points");
    std::vector<std::vector<std::uint32_t>> nb(n);
    for (std::uint32_t i = 0; i < d.blocks.size(); ++i)
      for (auto x : d.blocks[i]) {
        if (x >= d.v) throw Error(ErrorKind::Parse, "block point out of range");
        nb[x].push_back(v + i);
        nb[v + i].push_back(x);
      }
    offset.assign(n + 1, 0);
    for (std::uint32_t i = 0; i < n; ++i) offset[i + 1] = offset[i] + static_cast<std::uint32_t>(nb[i].size());
    for (auto& l : nb) adj.insert(adj.end(), l.begin(), l.end());
  }
};

using Trace = std::vector<std::uint64_t>;

// Collects a refinement trace and tracks it against the first leaf path and
// the best path. Without references it never requests an abort.
struct TraceSink {
  Trace& out;
  const Trace* first = nullptr;
  bool first_eq = false;
  const Trace* best = nullptr;
  int best_cmp = 1;

  // False once the trace can neither equal the first path nor reach the best.
  bool push(std::uint64_t v) {
    const std::size_t i = out.size();
    out.push_back(v);
    if (first_eq && (i >= first->size() || (*first)[i] != v)) first_eq = false;
    if (best_cmp == 0) {
      if (i >= best->size())
        best_cmp = 1;
      else if ((*best)[i] != v)
        best_cmp = v < (*best)[i] ? -1 : 1;
    }
    return first_eq || best_cmp >= 0;
  }

  void finish() {
    if (first_eq && out.size() != first->size()) first_eq = false;
    if (best_cmp == 0 && out.size() < best->size()) best_cmp = -1;
  }
};

// Ordered partition: lab[pos] = vertex, cells are contiguous position ranges.
struct Partition {
  std::vector<std::uint32_t> lab, pos, start, end;

  std::uint32_t cell_of(std::uint32_t vertex) const { return start[pos[vertex]]; }
  std::uint32_t size(std::uint32_t c) const { return end[c] - c; }
};

struct Refiner {
  const Graph& g;
  std::vector<std::uint32_t> cnt;
  std::vector<char> in_queue;

  explicit Refiner(const Graph& graph) : g(graph), cnt(graph.n, 0), in_queue(graph.n, 0) {}

  // Returns false if the sink requested an abort; p is then unusable.
  bool run(Partition& p, std::deque<std::uint32_t>& queue, TraceSink& trace) {
    while (!queue.empty()) {
      const std::uint32_t w = queue.front();
      queue.pop_front();
      in_queue[w] = 0;
      touched.clear();
      for (std::uint32_t i = w; i < p.end[w]; ++i) {
        const std::uint32_t x = p.lab[i];
        for (std::uint32_t k = g.offset[x]; k < g.offset[x + 1]; ++k)
          if (cnt[g.adj[k]]++ == 0) touched.push_back(g.adj[k]);
      }
      by_cell.clear();
      for (auto u : touched) by_cell.emplace_back(p.cell_of(u), u);
      std::sort(by_cell.begin(), by_cell.end());
      bool ok = true;
      for (std::size_t i = 0; ok && i < by_cell.size();) {
        std::size_t j = i;
        while (j < by_cell.size() && by_cell[j].first == by_cell[i].first) ++j;
        ok = split(p, by_cell[i].first, std::span(by_cell).subspan(i, j - i), queue, trace);
        i = j;
      }
      for (auto u : touched) cnt[u] = 0;
      if (!ok) {
        queue.clear();
        return false;
      }
    }
    std::uint64_t ncells = 0;
    for (std::uint32_t i = 0; i < g.n; i = p.end[i]) ++ncells;
    const bool ok = trace.push(ncells);
    trace.finish();
    return ok && (trace.first_eq || trace.best_cmp >= 0);
  }

 private:
  std::vector<std::uint32_t> touched, frag;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> by_cell;

 public:

  // Untouched members (count 0) stay in front; touched ones move to the
  // tail ordered by count. Fragments are ordered by count.
  bool split(Partition& p, std::uint32_t c, std::span<const std::pair<std::uint32_t, std::uint32_t>> members,
             std::deque<std::uint32_t>& queue, TraceSink& trace) {
    const std::uint32_t e = p.end[c];
    if (e - c == 1) return true;
    const auto m = static_cast<std::uint32_t>(members.size());
    bool uniform = m == e - c;
    for (std::uint32_t i = 1; uniform && i < m; ++i)
      if (cnt[members[i].second] != cnt[members[0].second]) uniform = false;
    if (uniform) return true;
    std::uint32_t k = e;
    for (const auto& [cell, u] : members) {
      --k;
      const std::uint32_t pu = p.pos[u], other = p.lab[k];
      p.lab[pu] = other;
      p.pos[other] = pu;
      p.lab[k] = u;
      p.pos[u] = k;
    }
    std::sort(p.lab.begin() + k, p.lab.begin() + e,
              [&](std::uint32_t a, std::uint32_t b) { return cnt[a] < cnt[b]; });
    frag.clear();
    if (k > c) frag.push_back(c);
    for (std::uint32_t i = k; i < e; ++i) {
      p.pos[p.lab[i]] = i;
      if (i == k || cnt[p.lab[i]] != cnt[p.lab[i - 1]]) frag.push_back(i);
    }
    bool ok = trace.push(c) && trace.push(frag.size());
    std::uint32_t largest = frag[0], largest_size = 0;
    for (std::size_t f = 0; f < frag.size(); ++f) {
      const std::uint32_t fs = frag[f];
      const std::uint32_t fe = f + 1 < frag.size() ? frag[f + 1] : e;
      ok = ok && trace.push(cnt[p.lab[fs]]) && trace.push(fe - fs);
      p.end[fs] = fe;
      for (std::uint32_t i = fs; i < fe; ++i) p.start[i] = fs;
      if (fe - fs > largest_size) {
        largest = fs;
        largest_size = fe - fs;
      }
    }
    const bool was_queued = in_queue[c] != 0;
    for (std::uint32_t fs : frag) {
      if (in_queue[fs]) continue;
      if (!was_queued && fs == largest) continue;
      in_queue[fs] = 1;
      queue.push_back(fs);
    }
    return ok;
  }
};

Partition initial_partition(const Graph& g, const Design& d, const Coloring& c,
                            std::deque<std::uint32_t>& queue, std::vector<char>& in_queue) {
  auto color = [&](std::uint32_t x) -> std::uint64_t {
    if (x < g.v) return c.points.empty() ? 0 : c.points[x];
    const std::uint32_t b = x - g.v;
    return (std::uint64_t{1} << 32) + (c.blocks.empty() ? 0 : c.blocks[b]);
  };
  if (!c.points.empty() && c.points.size() != d.v) throw Error(ErrorKind::Parse, "point coloring size");
  if (!c.blocks.empty() && c.blocks.size() != d.blocks.size())
    throw Error(ErrorKind::Parse, "block coloring size");
  Partition p;
  p.lab.resize(g.n);
  std::iota(p.lab.begin(), p.lab.end(), 0u);
  std::stable_sort(p.lab.begin(), p.lab.end(),
                   [&](std::uint32_t a, std::uint32_t b) { return color(a) < color(b); });
  p.pos.resize(g.n);
  p.start.resize(g.n);
  p.end.assign(g.n, 0);
  std::uint32_t s = 0;
  for (std::uint32_t i = 0; i < g.n; ++i) {
    p.pos[p.lab[i]] = i;
    if (i > 0 && color(p.lab[i]) != color(p.lab[i - 1])) s = i;
    p.start[i] = s;
  }
  for (std::uint32_t i = g.n; i-- > 0;) p.end[p.start[i]] = std::max(p.end[p.start[i]], i + 1);
  for (std::uint32_t i = 0; i < g.n; i = p.end[i]) {
    queue.push_back(i);
    in_queue[i] = 1;
  }
  return p;
}

std::vector<std::uint32_t> union_find_orbits(std::uint32_t v, const std::vector<Perm>& gens) {
  std::vector<std::uint32_t> parent(v);
  std::iota(parent.begin(), parent.end(), 0u);
  auto find = [&](std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& gp : gens)
    for (std::uint32_t x = 0; x < v; ++x) {
      const std::uint32_t a = find(x), b = find(gp[x]);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  for (std::uint32_t x = 0; x < v; ++x) parent[x] = find(x);
  return parent;
}

bool fixes_all(const Perm& p, const std::vector<std::uint32_t>& pts) {
  for (auto x : pts)
    if (p[x] != x) return false;
  return true;
}

// User colors refined by the O'Nan counts, renumbered by rank.
Coloring with_invariant(const Design& d, const Coloring& c) {
  const auto inv = onan_counts(d);
  if (inv.empty()) return c;
  std::vector<std::pair<std::uint32_t, std::uint64_t>> key(d.v);
  for (std::uint32_t x = 0; x < d.v; ++x) key[x] = {c.points.empty() ? 0u : c.points[x], inv[x]};
  auto sorted = key;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  Coloring out{std::vector<std::uint32_t>(d.v), c.blocks};
  for (std::uint32_t x = 0; x < d.v; ++x)
    out.points[x] = static_cast<std::uint32_t>(std::lower_bound(sorted.begin(), sorted.end(), key[x]) - sorted.begin());
  return out;
}

struct Leaf {
  std::vector<std::uint32_t> lab;  // position -> point
  std::vector<Trace> traces;
  std::vector<std::uint32_t> cert;
};

class Search {
 public:
  Search(const Design& d, const Coloring& c)
      : d_(d), g_(d), c_(with_invariant(d, c)), refiner_(g_), group_(g_.v, {}) {}

  AutomorphismResult run() {
    std::deque<std::uint32_t> queue;
    Partition p = initial_partition(g_, d_, c_, queue, refiner_.in_queue);
    Trace t;
    TraceSink sink{t};
    refiner_.run(p, queue, sink);
    traces_.push_back(std::move(t));
    eq_first_.push_back(true);
    dfs(p, 0, true);

    AutomorphismResult r;
    r.generators = gens_;
    r.nodes = nodes_;
    std::uint64_t product = 1;
    for (std::size_t k = 0; k < first_path_.size(); ++k) {
      std::vector<std::uint32_t> prefix(first_path_.begin(), first_path_.begin() + static_cast<std::ptrdiff_t>(k));
      std::vector<Perm> stab;
      for (const auto& gp : gens_)
        if (fixes_all(gp, prefix)) stab.push_back(gp);
      const auto orb = union_find_orbits(g_.v, stab);
      const auto root = orb[first_path_[k]];
      product *= static_cast<std::uint64_t>(std::count(orb.begin(), orb.end(), root));
    }
    r.order = group_.order();
    if (r.order != product)
      throw Error(ErrorKind::AxiomViolation, "automorphism search is inconsistent: orbit product " +
                                                 std::to_string(product) + " vs group order " +
                                                 std::to_string(r.order));
    r.canonical_labeling.resize(g_.v);
    for (std::uint32_t i = 0; i < g_.v; ++i) r.canonical_labeling[best_->lab[i]] = i;
    r.canonical_blocks = relabeled_blocks(r.canonical_labeling);
    return r;
  }

 private:
  const Design& d_;
  Graph g_;
  Coloring c_;
  Refiner refiner_;
  std::vector<Perm> gens_;
  PermGroup group_;
  std::optional<Leaf> first_, best_;
  std::vector<Trace> traces_;
  std::vector<bool> eq_first_;
  std::vector<std::uint32_t> prefix_;
  std::vector<std::uint32_t> first_path_;
  std::uint64_t nodes_ = 0;

  std::vector<std::vector<std::uint32_t>> relabeled_blocks(const Perm& label) const {
    std::vector<std::vector<std::uint32_t>> out;
    out.reserve(d_.blocks.size());
    for (const auto& b : d_.blocks) {
      std::vector<std::uint32_t> nb;
      for (auto x : b) nb.push_back(label[x]);
      std::sort(nb.begin(), nb.end());
      out.push_back(std::move(nb));
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  std::vector<std::uint32_t> certificate(const Partition& p) const {
    std::vector<std::uint32_t> label(g_.v);
    for (std::uint32_t i = 0; i < g_.v; ++i) label[p.lab[i]] = i;
    std::vector<std::vector<std::uint32_t>> rows;
    rows.reserve(d_.blocks.size());
    for (std::size_t i = 0; i < d_.blocks.size(); ++i) {
      std::vector<std::uint32_t> row{c_.blocks.empty() ? 0u : c_.blocks[i],
                                     static_cast<std::uint32_t>(d_.blocks[i].size())};
      for (auto x : d_.blocks[i]) row.push_back(label[x]);
      std::sort(row.begin() + 2, row.end());
      rows.push_back(std::move(row));
    }
    std::sort(rows.begin(), rows.end());
    std::vector<std::uint32_t> cert;
    for (std::uint32_t i = 0; i < g_.v; ++i) cert.push_back(c_.points.empty() ? 0u : c_.points[p.lab[i]]);
    for (const auto& row : rows) cert.insert(cert.end(), row.begin(), row.end());
    return cert;
  }

  // -1, 0, +1 comparing the current path's traces with the best leaf's.
  int compare_best(std::size_t level) const {
    if (!best_) return 0;
    for (std::size_t l = 0; l <= level; ++l) {
      if (l >= best_->traces.size()) return 1;
      if (traces_[l] != best_->traces[l]) return traces_[l] < best_->traces[l] ? -1 : 1;
    }
    return 0;
  }

  std::uint32_t target_cell(const Partition& p) const {
    std::uint32_t best = ~0u, best_size = ~0u;
    for (std::uint32_t i = 0; i < g_.v; i = p.end[i]) {
      const std::uint32_t s = p.size(i);
      if (s > 1 && s < best_size) {
        best = i;
        best_size = s;
      }
    }
    return best;
  }

  void add_generator(const std::vector<std::uint32_t>& from, const std::vector<std::uint32_t>& to) {
    Perm gp(g_.v);
    for (std::uint32_t i = 0; i < g_.v; ++i) gp[from[i]] = to[i];
    if (group_.contains(gp)) return;
    // certify: blocks and colors preserved
    block_permutation(d_, gp);
    if (!c_.points.empty())
      for (std::uint32_t x = 0; x < g_.v; ++x)
        if (c_.points[x] != c_.points[gp[x]]) throw Error(ErrorKind::AxiomViolation, "color not preserved");
    group_.add(gp);
    gens_.push_back(std::move(gp));
  }

  // Returns true to request a jump back to the nearest first-path ancestor.
  bool leaf(const Partition& p) {
    Leaf cur;
    cur.lab.assign(p.lab.begin(), p.lab.begin() + g_.v);
    cur.traces = traces_;
    cur.cert = certificate(p);
    if (!first_) {
      first_path_ = prefix_;
      first_ = cur;
      best_ = std::move(cur);
      return false;
    }
    if (eq_first_.back() && cur.cert == first_->cert) {
      add_generator(first_->lab, cur.lab);
      return true;
    }
    const int cmp = compare_best(traces_.size() - 1);
    if (cmp > 0 || (cmp == 0 && cur.cert > best_->cert)) {
      best_ = std::move(cur);
    } else if (cmp == 0 && cur.cert == best_->cert) {
      add_generator(best_->lab, cur.lab);
    }
    return false;
  }

  bool dfs(const Partition& p, std::size_t level, bool on_first) {
    ++nodes_;
    const std::uint32_t cell = target_cell(p);
    if (cell == ~0u) return leaf(p);

    std::vector<std::uint32_t> children(p.lab.begin() + cell, p.lab.begin() + p.end[cell]);
    std::sort(children.begin(), children.end());
    std::vector<std::uint32_t> explored;
    std::size_t orbit_gens = 0;
    std::vector<std::uint32_t> orb;
    for (std::uint32_t w : children) {
      if (!explored.empty() && !gens_.empty()) {
        if (orbit_gens != gens_.size()) {
          std::vector<Perm> stab;
          for (const auto& gp : gens_)
            if (fixes_all(gp, prefix_)) stab.push_back(gp);
          orb = union_find_orbits(g_.v, stab);
          orbit_gens = gens_.size();
        }
        bool seen = false;
        for (auto e : explored)
          if (orb[e] == orb[w]) seen = true;
        if (seen) continue;
      }
      Partition child = p;
      std::deque<std::uint32_t> queue;
      individualize(child, w, queue);
      Trace t;
      TraceSink sink{t};
      if (first_) {
        const int prefix_cmp = compare_best(level);
        sink.first_eq = eq_first_.back() && level + 1 < first_->traces.size();
        if (sink.first_eq) sink.first = &first_->traces[level + 1];
        sink.best_cmp = prefix_cmp;
        if (prefix_cmp == 0) {
          if (level + 1 < best_->traces.size())
            sink.best = &best_->traces[level + 1];
          else
            sink.best_cmp = 1;
        }
      }
      if (!sink.push(child.pos[w]) || !refiner_.run(child, queue, sink)) continue;
      traces_.push_back(std::move(t));
      const bool eq = first_ ? sink.first_eq : true;
      eq_first_.push_back(eq);
      const bool child_first = on_first && (first_ ? first_path_.size() > level && first_path_[level] == w : true);
      explored.push_back(w);
      prefix_.push_back(w);
      const bool jump = dfs(child, level + 1, child_first);
      prefix_.pop_back();
      traces_.pop_back();
      eq_first_.pop_back();
      if (jump && !on_first) return true;
    }
    return false;
  }

  void individualize(Partition& p, std::uint32_t w, std::deque<std::uint32_t>& queue) {
    const std::uint32_t c = p.cell_of(w);
    const std::uint32_t e = p.end[c];
    const std::uint32_t pw = p.pos[w];
    const std::uint32_t u = p.lab[c];
    std::swap(p.lab[c], p.lab[pw]);
    p.pos[w] = c;
    p.pos[u] = pw;
    p.end[c] = c + 1;
    p.end[c + 1] = e;
    for (std::uint32_t i = c + 1; i < e; ++i) p.start[i] = c + 1;
    std::fill(refiner_.in_queue.begin(), refiner_.in_queue.end(), 0);
    queue.push_back(c);
    refiner_.in_queue[c] = 1;
  }
};

}  // namespace

std::vector<std::uint64_t> onan_counts(const Design& d) {
  if (d.v > kMaxIsoPoints) return {};
  std::vector<std::vector<std::uint32_t>> through(d.v);
  std::vector<std::int32_t> join(std::size_t{d.v} * d.v, -1);
  std::size_t r = 0, k = 0;
  for (std::uint32_t b = 0; b < d.blocks.size(); ++b) {
    k = std::max(k, d.blocks[b].size());
    for (auto x : d.blocks[b]) {
      if (x >= d.v) return {};
      through[x].push_back(b);
      for (auto y : d.blocks[b]) {
        if (x == y) continue;
        auto& j = join[std::size_t{x} * d.v + y];
        if (j >= 0) return {};
        j = static_cast<std::int32_t>(b);
      }
    }
  }
  for (const auto& t : through) r = std::max(r, t.size());
  const double lines = static_cast<double>(k) * static_cast<double>(k);
  const double work = static_cast<double>(d.v) * static_cast<double>(r * r) / 2 * lines * lines / 2 *
                      static_cast<double>(k);
  if (work > static_cast<double>(kMaxOnanWork)) return {};

  std::vector<std::vector<char>> inc(d.blocks.size(), std::vector<char>(d.v, 0));
  for (std::uint32_t b = 0; b < d.blocks.size(); ++b)
    for (auto x : d.blocks[b]) inc[b][x] = 1;
  struct Secant {
    std::int32_t block;
    std::uint32_t a, b;
  };
  std::vector<std::uint64_t> out(d.v, 0);
  std::vector<Secant> sec;
  for (std::uint32_t x = 0; x < d.v; ++x) {
    const auto& t = through[x];
    for (std::size_t i = 0; i < t.size(); ++i)
      for (std::size_t j = i + 1; j < t.size(); ++j) {
        sec.clear();
        for (auto a : d.blocks[t[i]])
          for (auto b : d.blocks[t[j]])
            if (a != x && b != x) {
              const auto l = join[std::size_t{a} * d.v + b];
              if (l >= 0) sec.push_back({l, a, b});
            }
        for (std::size_t s = 0; s < sec.size(); ++s)
          for (std::size_t u = s + 1; u < sec.size(); ++u) {
            if (sec[s].a == sec[u].a || sec[s].b == sec[u].b) continue;
            for (auto y : d.blocks[sec[s].block])
              if (inc[sec[u].block][y] && !inc[t[i]][y] && !inc[t[j]][y]) {
                ++out[x];
                break;
              }
          }
      }
  }
  return out;
}

std::vector<std::uint32_t> refine(const Design& d, const Coloring& c) {
  Graph g(d);
  Refiner r(g);
  std::deque<std::uint32_t> queue;
  Partition p = initial_partition(g, d, c, queue, r.in_queue);
  Trace t;
  TraceSink sink{t};
  r.run(p, queue, sink);
  std::vector<std::uint32_t> out(g.n);
  std::uint32_t idx = 0;
  for (std::uint32_t i = 0; i < g.n; i = p.end[i], ++idx)
    for (std::uint32_t k = i; k < p.end[i]; ++k) out[p.lab[k]] = idx;
  return out;
}

AutomorphismResult automorphisms(const Design& d, const Coloring& c) { return Search(d, c).run(); }

std::optional<Perm> isomorphism(const Design& a, const Design& b, const Coloring& ca, const Coloring& cb) {
  if (a.v != b.v || a.blocks.size() != b.blocks.size()) return std::nullopt;
  const auto ra = automorphisms(a, ca);
  const auto rb = automorphisms(b, cb);
  if (ra.canonical_blocks != rb.canonical_blocks) return std::nullopt;
  auto color_of = [](const Coloring& c, std::uint32_t x) { return c.points.empty() ? 0u : c.points[x]; };
  Perm inv_b(b.v);
  for (std::uint32_t x = 0; x < b.v; ++x) inv_b[rb.canonical_labeling[x]] = x;
  Perm f(a.v);
  for (std::uint32_t x = 0; x < a.v; ++x) {
    f[x] = inv_b[ra.canonical_labeling[x]];
    if (color_of(ca, x) != color_of(cb, f[x])) return std::nullopt;
  }
  // verify: blocks map to blocks
  std::vector<std::vector<std::uint32_t>> img;
  for (const auto& blk : a.blocks) {
    std::vector<std::uint32_t> nb;
    for (auto x : blk) nb.push_back(f[x]);
    std::sort(nb.begin(), nb.end());
    img.push_back(std::move(nb));
  }
  std::sort(img.begin(), img.end());
  std::vector<std::vector<std::uint32_t>> bb = b.blocks;
  for (auto& blk : bb) std::sort(blk.begin(), blk.end());
  std::sort(bb.begin(), bb.end());
  if (img != bb) return std::nullopt;
  return f;
}

bool isomorphic(const Design& a, const Design& b) { return isomorphism(a, b).has_value(); }

std::vector<std::uint32_t> block_permutation(const Design& d, const Perm& p) {
  std::map<std::vector<std::uint32_t>, std::uint32_t> index;
  for (std::uint32_t i = 0; i < d.blocks.size(); ++i) {
    auto b = d.blocks[i];
    std::sort(b.begin(), b.end());
    index.emplace(std::move(b), i);
  }
  std::vector<std::uint32_t> out(d.blocks.size());
  for (std::uint32_t i = 0; i < d.blocks.size(); ++i) {
    std::vector<std::uint32_t> img;
    for (auto x : d.blocks[i]) img.push_back(p[x]);
    std::sort(img.begin(), img.end());
    auto it = index.find(img);
    if (it == index.end()) throw Error(ErrorKind::AxiomViolation, "permutation does not preserve blocks");
    out[i] = it->second;
  }
  return out;
}

bool block_stabilizer_check(const Design& d, std::size_t b) {
  const auto r = automorphisms(d);
  for (const auto& gp : r.generators)
    if (block_permutation(d, gp)[b] != b) return false;
  return true;
}

}  // namespace slu
