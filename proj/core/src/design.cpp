#include "slu/design.hpp"

#include <algorithm>

namespace slu {

void Design::canonicalize() {
  for (auto& b : blocks) std::sort(b.begin(), b.end());
  std::sort(blocks.begin(), blocks.end());
}

std::vector<std::vector<std::uint32_t>> point_blocks(const Design& d) {
  std::vector<std::vector<std::uint32_t>> out(d.v);
  for (std::uint32_t i = 0; i < d.blocks.size(); ++i)
    for (auto x : d.blocks[i]) out[x].push_back(i);
  return out;
}

namespace {

DesignReport failure(std::string why, std::vector<std::uint32_t> witness) {
  return DesignReport{false, std::move(why), std::move(witness)};
}

// Every pair of distinct points on exactly one block; first bad pair wins.
DesignReport check_pairs(const Design& d) {
  const std::size_t v = d.v;
  std::vector<std::uint8_t> cover(v * v, 0);
  for (const auto& b : d.blocks)
    for (std::size_t i = 0; i < b.size(); ++i)
      for (std::size_t j = i + 1; j < b.size(); ++j) {
        auto& c = cover[std::min(b[i], b[j]) * v + std::max(b[i], b[j])];
        if (c < 255) ++c;
      }
  for (std::uint32_t x = 0; x < v; ++x)
    for (std::uint32_t y = x + 1; y < v; ++y) {
      const auto c = cover[x * v + y];
      if (c != 1)
        return failure("points joined by " + std::to_string(c) + " blocks", {x, y});
    }
  return {};
}

DesignReport check_blocks_valid(const Design& d) {
  for (std::uint32_t i = 0; i < d.blocks.size(); ++i) {
    const auto& b = d.blocks[i];
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (b[j] >= d.v) return failure("block has a point out of range", {i});
      if (j > 0 && b[j - 1] >= b[j]) return failure("block is not a strictly sorted point list", {i});
    }
  }
  return {};
}

}  // namespace

DesignReport verify_design(const Design& d, unsigned n) {
  const std::uint64_t v = std::uint64_t{n} * n * n + 1;
  if (d.v != v) return failure("expected " + std::to_string(v) + " points", {});
  if (auto r = check_blocks_valid(d); !r.ok) return r;
  for (std::uint32_t i = 0; i < d.blocks.size(); ++i)
    if (d.blocks[i].size() != n + 1) return failure("block size differs from n+1", {i});
  const std::uint64_t b = std::uint64_t{n} * n * (std::uint64_t{n} * n - n + 1);
  if (d.blocks.size() != b)
    return failure("expected " + std::to_string(b) + " blocks, found " + std::to_string(d.blocks.size()),
                   {});
  return check_pairs(d);
}

DesignReport verify_affine_axioms(const Design& d, unsigned q) {
  const std::uint64_t v = std::uint64_t{q} * q * q - q;
  if (d.v != v) return failure("expected " + std::to_string(v) + " points", {});
  if (auto r = check_blocks_valid(d); !r.ok) return r;
  for (std::uint32_t i = 0; i < d.blocks.size(); ++i)
    if (d.blocks[i].size() != q && d.blocks[i].size() != q + 1)
      return failure("block size is neither q nor q+1", {i});
  const auto pb = point_blocks(d);
  for (std::uint32_t x = 0; x < d.v; ++x)
    if (pb[x].size() != std::size_t{q} * q)
      return failure("point lies on " + std::to_string(pb[x].size()) + " blocks", {x});
  return check_pairs(d);
}

}  // namespace slu
