#include "slu/exact_cover.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <mutex>
#include <thread>

#include "slu/error.hpp"

namespace slu {

namespace {

// Node 0 is the root header, nodes 1..columns are column headers.
struct Links {
  std::vector<std::uint32_t> l, r, u, d, col, row, size;

  std::uint32_t new_node(std::uint32_t c, std::uint32_t rw) {
    const auto id = static_cast<std::uint32_t>(l.size());
    l.push_back(id);
    r.push_back(id);
    u.push_back(id);
    d.push_back(id);
    col.push_back(c);
    row.push_back(rw);
    return id;
  }

  void cover(std::uint32_t c) {
    r[l[c]] = r[c];
    l[r[c]] = l[c];
    for (std::uint32_t i = d[c]; i != c; i = d[i])
      for (std::uint32_t j = r[i]; j != i; j = r[j]) {
        d[u[j]] = d[j];
        u[d[j]] = u[j];
        --size[col[j]];
      }
  }

  void uncover(std::uint32_t c) {
    for (std::uint32_t i = u[c]; i != c; i = u[i])
      for (std::uint32_t j = l[i]; j != i; j = l[j]) {
        ++size[col[j]];
        d[u[j]] = j;
        u[d[j]] = j;
      }
    r[l[c]] = c;
    l[r[c]] = c;
  }

  std::uint32_t choose() const {
    std::uint32_t best = 0;
    std::uint32_t best_size = ~0u;
    for (std::uint32_t c = r[0]; c != 0; c = r[c])
      if (size[c] < best_size) {
        best = c;
        best_size = size[c];
        if (best_size <= 1) break;
      }
    return best;
  }
};

Links build(std::size_t columns, const std::vector<std::vector<std::uint32_t>>& rows) {
  Links x;
  x.size.assign(columns + 1, 0);
  x.new_node(0, ~0u);
  for (std::uint32_t c = 1; c <= columns; ++c) {
    const std::uint32_t h = x.new_node(c, ~0u);
    x.l[h] = h - 1;
    x.r[h - 1] = h;
    x.r[h] = 0;
    x.l[0] = h;
  }
  for (std::uint32_t rid = 0; rid < rows.size(); ++rid) {
    std::uint32_t first = ~0u;
    for (std::uint32_t c0 : rows[rid]) {
      const std::uint32_t c = c0 + 1;
      const std::uint32_t n = x.new_node(c, rid);
      x.u[n] = x.u[c];
      x.d[n] = c;
      x.d[x.u[c]] = n;
      x.u[c] = n;
      ++x.size[c];
      if (first == ~0u) {
        first = n;
      } else {
        x.l[n] = x.l[first];
        x.r[n] = first;
        x.r[x.l[first]] = n;
        x.l[first] = n;
      }
    }
  }
  return x;
}

struct Search {
  Links x;
  std::vector<std::uint32_t> chosen;
  std::atomic<std::uint64_t>* nodes;
  std::uint64_t budget;
  const std::function<bool(std::span<const std::uint32_t>)>* emit;
  bool stop = false;

  bool over_budget() {
    const std::uint64_t n = nodes->fetch_add(1, std::memory_order_relaxed) + 1;
    return budget != 0 && n > budget;
  }

  void run() {
    if (stop) return;
    if (x.r[0] == 0) {
      if (!(*emit)(chosen)) stop = true;
      return;
    }
    if (over_budget()) {
      stop = true;
      return;
    }
    const std::uint32_t c = x.choose();
    if (x.size[c] == 0) return;
    x.cover(c);
    for (std::uint32_t i = x.d[c]; i != c && !stop; i = x.d[i]) {
      take(i);
      run();
      release(i);
    }
    x.uncover(c);
  }

  void take(std::uint32_t i) {
    chosen.push_back(x.row[i]);
    for (std::uint32_t j = x.r[i]; j != i; j = x.r[j]) x.cover(x.col[j]);
  }
  void release(std::uint32_t i) {
    for (std::uint32_t j = x.l[i]; j != i; j = x.l[j]) x.uncover(x.col[j]);
    chosen.pop_back();
  }
};

}  // namespace

unsigned default_thread_count() {
  if (const char* env = std::getenv("UNITAL_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v > 0) return static_cast<unsigned>(v);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

ExactCover::ExactCover(std::size_t columns) : columns_(columns) {}

std::uint32_t ExactCover::add_row(std::span<const std::uint32_t> columns) {
  std::vector<std::uint32_t> r(columns.begin(), columns.end());
  std::sort(r.begin(), r.end());
  r.erase(std::unique(r.begin(), r.end()), r.end());
  for (auto c : r)
    if (c >= columns_) throw Error(ErrorKind::Parse, "exact cover column out of range");
  rows_.push_back(std::move(r));
  return static_cast<std::uint32_t>(rows_.size() - 1);
}

std::uint64_t ExactCover::visit(
    const std::function<bool(std::span<const std::uint32_t>)>& on_solution) const {
  std::atomic<std::uint64_t> nodes{0};
  Search s{build(columns_, rows_), {}, &nodes, 0, &on_solution};
  s.run();
  return nodes.load();
}

ExactCoverResult ExactCover::solve(const ExactCoverOptions& options) const {
  ExactCoverResult result;
  const unsigned threads = options.threads == 0 ? default_thread_count() : options.threads;
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> exhausted{false};
  std::mutex mu;

  const Links base = build(columns_, rows_);
  if (base.r[0] == 0) {
    result.solutions.emplace_back();
    return result;
  }
  // Top-level branches: the rows of the first chosen column.
  const std::uint32_t c = base.choose();
  std::vector<std::uint32_t> branches;
  for (std::uint32_t i = base.d[c]; i != c; i = base.d[i]) branches.push_back(i);

  auto worker = [&](unsigned id, unsigned stride) {
    std::vector<std::vector<std::uint32_t>> local;
    const std::function<bool(std::span<const std::uint32_t>)> emit =
        [&](std::span<const std::uint32_t> rows) {
          std::vector<std::uint32_t> s(rows.begin(), rows.end());
          std::sort(s.begin(), s.end());
          local.push_back(std::move(s));
          return true;
        };
    Search s{base, {}, &nodes, options.node_budget, &emit};
    s.x.cover(c);
    for (std::size_t b = id; b < branches.size() && !s.stop; b += stride) {
      s.take(branches[b]);
      s.run();
      s.release(branches[b]);
    }
    if (s.stop) exhausted = true;
    std::lock_guard lock(mu);
    for (auto& sol : local) result.solutions.push_back(std::move(sol));
  };

  const unsigned n = std::min<unsigned>(threads, static_cast<unsigned>(branches.size()));
  if (n <= 1) {
    worker(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < n; ++t) pool.emplace_back(worker, t, n);
    for (auto& th : pool) th.join();
  }
  std::sort(result.solutions.begin(), result.solutions.end());
  result.nodes = nodes.load();
  result.complete = !exhausted.load();
  return result;
}

}  // namespace slu
