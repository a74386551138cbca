#pragma once

#include <cstdint>

#include "slu/design.hpp"
#include "slu/parallelism.hpp"
#include "slu/unital.hpp"

namespace slu {

/// Point at infinity of the class labelled by Sylow subgroup s.
inline std::uint32_t infinity_point(const SL2& g, std::size_t s) {
  return static_cast<std::uint32_t>(g.order() + s);
}

/// Closure of u by pi: each short block gains the point at infinity of its
/// class (points n + sylow id), and the block of all points at infinity is
/// added; it sorts last. Throws Error{InvalidParallelism}.
Design close(const AffineUnital& u, const Parallelism& pi);

/// Index of the block at infinity in a closure (the last block).
inline std::size_t infinity_block(const Design& d) { return d.blocks.size() - 1; }

}  // namespace slu
