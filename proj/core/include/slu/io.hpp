#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "slu/design.hpp"
#include "slu/group.hpp"
#include "slu/parallelism.hpp"

namespace slu {

struct PrimePower {
  unsigned p = 0;
  unsigned e = 0;
};

/// Throws Error{NotPrime} unless q = p^e with p prime and e >= 1.
PrimePower prime_power(unsigned q);

/// The q with q^3 - q = v. Throws Error{Parse} if there is none.
unsigned affine_order(std::uint32_t v);

/// `#format 1`, `v=<v> b=<b>`, then one sorted block per line, lines sorted.
void write_blocks(std::ostream& out, const Design& d);
/// Throws Error{Parse} with the offending line number.
Design read_blocks(std::istream& in);

/// A parallelism as stored on disk: blocks given by their point lists.
struct ParaFile {
  unsigned q = 0;
  std::vector<std::vector<std::vector<Point>>> classes;
};

/// `#format 1`, `q=<q> classes=<c>`, then `class <i>:` followed by its
/// blocks, one sorted point list per line, classes in label order.
void write_para(std::ostream& out, const SL2& g, const Parallelism& pi);
ParaFile read_para(std::istream& in);

/// Resolves point lists to short blocks of g. Throws Error{InvalidParallelism}
/// naming the first list that is not a short block.
std::vector<std::vector<BlockId>> resolve_classes(const SL2& g, const ParaFile& f);

}  // namespace slu
