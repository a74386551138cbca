#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace slu {

struct ExactCoverOptions {
  /// Search nodes allowed across all workers; 0 means unlimited.
  std::uint64_t node_budget = 0;
  /// Worker count for the top-level branches; 0 reads UNITAL_THREADS.
  unsigned threads = 1;
};

struct ExactCoverResult {
  /// Each solution is a sorted list of row ids; the list itself is sorted.
  std::vector<std::vector<std::uint32_t>> solutions;
  std::uint64_t nodes = 0;
  /// False iff the node budget ran out.
  bool complete = true;
};

/// Algorithm X with dancing links. Every column is primary.
class ExactCover {
 public:
  explicit ExactCover(std::size_t columns);

  /// Returns the row id (rows are numbered in insertion order).
  std::uint32_t add_row(std::span<const std::uint32_t> columns);

  std::size_t column_count() const noexcept { return columns_; }
  std::size_t row_count() const noexcept { return rows_.size(); }
  const std::vector<std::uint32_t>& row(std::uint32_t r) const noexcept { return rows_[r]; }

  /// All exact covers. The result does not depend on the worker count.
  ExactCoverResult solve(const ExactCoverOptions& options = {}) const;

  /// Single-threaded streaming search; the callback sees the chosen rows in
  /// search order and returns false to stop. Returns the node count.
  std::uint64_t visit(const std::function<bool(std::span<const std::uint32_t>)>& on_solution) const;

 private:
  std::size_t columns_;
  std::vector<std::vector<std::uint32_t>> rows_;
};

/// Worker count from UNITAL_THREADS, defaulting to hardware concurrency.
unsigned default_thread_count();

}  // namespace slu
