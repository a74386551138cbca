#include "slu/io.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "slu/error.hpp"

namespace slu {

PrimePower prime_power(unsigned q) {
  if (q < 2) throw Error(ErrorKind::NotPrime, std::to_string(q) + " is not a prime power");
  unsigned p = 2;
  while (q % p != 0) ++p;
  unsigned e = 0, r = q;
  while (r % p == 0) {
    r /= p;
    ++e;
  }
  if (r != 1) throw Error(ErrorKind::NotPrime, std::to_string(q) + " is not a prime power");
  return {p, e};
}

unsigned affine_order(std::uint32_t v) {
  for (std::uint64_t q = 2; q * q * q - q <= v; ++q)
    if (q * q * q - q == v) return static_cast<unsigned>(q);
  throw Error(ErrorKind::Parse, "point count " + std::to_string(v) + " is not q^3 - q");
}

namespace {

class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  // Next non-empty line; false at end of input.
  bool next(std::string& line) {
    while (std::getline(in_, line)) {
      ++number_;
      if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorKind::Parse, "line " + std::to_string(number_) + ": " + what);
  }

  void expect_format() {
    std::string line;
    if (!next(line) || line.rfind("#format 1", 0) != 0) fail("expected '#format 1'");
  }

  std::uint64_t field(const std::string& token, const std::string& key) const {
    if (token.rfind(key + "=", 0) != 0) fail("expected " + key + "=");
    try {
      std::size_t used = 0;
      const auto value = std::stoull(token.substr(key.size() + 1), &used);
      if (used != token.size() - key.size() - 1) fail("bad number in " + token);
      return value;
    } catch (const std::logic_error&) {
      fail("bad number in " + token);
    }
  }

  std::vector<std::uint32_t> numbers(const std::string& line) const {
    std::istringstream ss(line);
    std::vector<std::uint32_t> out;
    std::string tok;
    while (ss >> tok) {
      if (tok.find_first_not_of("0123456789") != std::string::npos) fail("bad point '" + tok + "'");
      out.push_back(static_cast<std::uint32_t>(std::stoul(tok)));
    }
    return out;
  }

 private:
  std::istream& in_;
  std::size_t number_ = 0;
};

void write_line(std::ostream& out, const std::vector<std::uint32_t>& b) {
  for (std::size_t i = 0; i < b.size(); ++i) out << (i ? " " : "") << b[i];
  out << '\n';
}

}  // namespace

void write_blocks(std::ostream& out, const Design& d) {
  Design c = d;
  c.canonicalize();
  out << "#format 1\n" << "v=" << c.v << " b=" << c.blocks.size() << '\n';
  for (const auto& b : c.blocks) write_line(out, b);
}

Design read_blocks(std::istream& in) {
  LineReader r(in);
  r.expect_format();
  std::string line;
  if (!r.next(line)) r.fail("missing header");
  std::istringstream hs(line);
  std::string tv, tb;
  hs >> tv >> tb;
  Design d;
  d.v = static_cast<std::uint32_t>(r.field(tv, "v"));
  const auto b = r.field(tb, "b");
  d.infinite_from = d.v;
  while (r.next(line)) {
    auto blk = r.numbers(line);
    for (auto x : blk)
      if (x >= d.v) r.fail("point " + std::to_string(x) + " out of range");
    d.blocks.push_back(std::move(blk));
  }
  if (d.blocks.size() != b) r.fail("expected " + std::to_string(b) + " blocks");
  d.canonicalize();
  return d;
}

void write_para(std::ostream& out, const SL2& g, const Parallelism& pi) {
  out << "#format 1\n" << "q=" << g.q() << " classes=" << pi.class_count() << '\n';
  const auto classes = pi.classes();
  for (std::size_t c = 0; c < classes.size(); ++c) {
    out << "class " << c << ":\n";
    for (BlockId b : classes[c]) write_line(out, g.block_points(b));
  }
}

ParaFile read_para(std::istream& in) {
  LineReader r(in);
  r.expect_format();
  std::string line;
  if (!r.next(line)) r.fail("missing header");
  std::istringstream hs(line);
  std::string tq, tc;
  hs >> tq >> tc;
  ParaFile f;
  f.q = static_cast<unsigned>(r.field(tq, "q"));
  const auto count = r.field(tc, "classes");
  while (r.next(line)) {
    if (line.rfind("class ", 0) == 0) {
      if (line.find(':') == std::string::npos) r.fail("expected 'class <i>:'");
      f.classes.emplace_back();
      continue;
    }
    if (f.classes.empty()) r.fail("block before first class");
    auto blk = r.numbers(line);
    std::sort(blk.begin(), blk.end());
    f.classes.back().push_back(std::move(blk));
  }
  if (f.classes.size() != count) r.fail("expected " + std::to_string(count) + " classes");
  return f;
}

std::vector<std::vector<BlockId>> resolve_classes(const SL2& g, const ParaFile& f) {
  if (f.q != g.q()) throw Error(ErrorKind::InvalidParallelism, "file is for q=" + std::to_string(f.q));
  std::vector<std::vector<BlockId>> out;
  for (std::size_t c = 0; c < f.classes.size(); ++c) {
    out.emplace_back();
    for (const auto& pts : f.classes[c]) {
      const auto b = g.find_block(pts);
      if (!b) {
        std::string list;
        for (auto x : pts) list += (list.empty() ? "" : " ") + std::to_string(x);
        throw Error(ErrorKind::InvalidParallelism, "class " + std::to_string(c) + ": {" + list +
                                                       "} is not a short block");
      }
      out.back().push_back(*b);
    }
  }
  return out;
}

}  // namespace slu
