#include "slu/closure.hpp"

#include "slu/error.hpp"

namespace slu {

Design close(const AffineUnital& u, const Parallelism& pi) {
  const SL2& g = u.group();
  const auto rep = verify_parallelism(g, pi);
  if (!rep.ok) throw Error(ErrorKind::InvalidParallelism, rep.violation);

  std::vector<std::uint32_t> inf_of_class(pi.class_count());
  for (std::size_t c = 0; c < pi.class_count(); ++c)
    inf_of_class[c] = infinity_point(g, class_sylow(g, pi, c));

  Design d;
  d.v = static_cast<std::uint32_t>(g.order() + pi.class_count());
  d.infinite_from = static_cast<std::uint32_t>(g.order());
  for (const auto& b : u.long_blocks()) d.blocks.emplace_back(b.begin(), b.end());
  for (BlockId b = 0; b < g.block_count(); ++b) {
    std::vector<std::uint32_t> blk(g.block_points(b).begin(), g.block_points(b).end());
    blk.push_back(inf_of_class[pi.class_of(b)]);
    d.blocks.push_back(std::move(blk));
  }
  std::vector<std::uint32_t> inf;
  for (std::uint32_t x = d.infinite_from; x < d.v; ++x) inf.push_back(x);
  d.blocks.push_back(std::move(inf));
  d.canonicalize();
  return d;
}

}  // namespace slu
