#include "slu/group.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "slu/error.hpp"

namespace slu {

Mat2 MatOps::mul(const Mat2& x, const Mat2& y) const noexcept {
  const Field& f = *f_;
  return {f.add(f.mul(x.a, y.a), f.mul(x.b, y.c)), f.add(f.mul(x.a, y.b), f.mul(x.b, y.d)),
          f.add(f.mul(x.c, y.a), f.mul(x.d, y.c)), f.add(f.mul(x.c, y.b), f.mul(x.d, y.d))};
}

FieldElem MatOps::det(const Mat2& x) const noexcept {
  return f_->sub(f_->mul(x.a, x.d), f_->mul(x.b, x.c));
}

Mat2 MatOps::inverse(const Mat2& x) const {
  const FieldElem di = f_->inv(det(x));
  return {f_->mul(x.d, di), f_->mul(f_->neg(x.b), di), f_->mul(f_->neg(x.c), di), f_->mul(x.a, di)};
}

Mat2 MatOps::scale(const Mat2& x, FieldElem s) const noexcept {
  return {f_->mul(x.a, s), f_->mul(x.b, s), f_->mul(x.c, s), f_->mul(x.d, s)};
}

Mat2 MatOps::frobenius(const Mat2& x, long long l) const noexcept {
  return {f_->frobenius(x.a, l), f_->frobenius(x.b, l), f_->frobenius(x.c, l),
          f_->frobenius(x.d, l)};
}

Mat2 MatOps::bar(const Mat2& x) const {
  return {f_->bar(x.a), f_->bar(x.b), f_->bar(x.c), f_->bar(x.d)};
}

Mat2 MatOps::projective_normal(const Mat2& x) const {
  for (FieldElem v : {x.a, x.b, x.c, x.d})
    if (v.code != 0) return scale(x, f_->inv(v));
  throw Error(ErrorKind::DivisionByZero, "zero matrix has no projective class");
}

bool Subgroup::contains(Point x) const {
  return std::binary_search(members.begin(), members.end(), x);
}

SL2::SL2(unsigned p, unsigned e) : field_(p, e), ops_(field_) {
  const std::uint64_t q = field_.q();
  const std::uint64_t n = (q - 1) * q * (q + 1);
  if (n > kMaxOrder)
    throw Error(ErrorKind::TooLarge, "SL(2," + std::to_string(q) + ") has " + std::to_string(n) +
                                         " elements, above the supported bound");

  lookup_.assign(static_cast<std::size_t>(q * q * q * q), -1);
  elems_.reserve(n);
  for (std::uint32_t a = 0; a < q; ++a)
    for (std::uint32_t b = 0; b < q; ++b)
      for (std::uint32_t c = 0; c < q; ++c)
        for (std::uint32_t d = 0; d < q; ++d) {
          const Mat2 m{{a}, {b}, {c}, {d}};
          if (ops_.det(m) == field_.one()) {
            lookup_[key(m)] = static_cast<std::int32_t>(elems_.size());
            elems_.push_back(m);
          }
        }

  one_ = index(ops_.identity());
  minus_one_ = index(ops_.scale(ops_.identity(), field_.neg(field_.one())));
  inv_.resize(n);
  for (Point x = 0; x < n; ++x) inv_[x] = index(ops_.inverse(elems_[x]));
  if (n <= 1500) {
    mul_.resize(n * n);
    for (Point x = 0; x < n; ++x)
      for (Point y = 0; y < n; ++y) mul_[x * n + y] = index(ops_.mul(elems_[x], elems_[y]));
  }

  build_sylows();
  build_blocks();
}

std::size_t SL2::key(const Mat2& m) const noexcept {
  const std::size_t q = field_.q();
  return ((m.a.code * q + m.b.code) * q + m.c.code) * q + m.d.code;
}

std::optional<Point> SL2::find(const Mat2& m) const noexcept {
  const std::int32_t i = lookup_[key(m)];
  if (i < 0) return std::nullopt;
  return static_cast<Point>(i);
}

Point SL2::index(const Mat2& m) const {
  const auto i = find(m);
  if (!i) throw Error(ErrorKind::BadMode, "matrix is not in SL(2,q)");
  return *i;
}

Point SL2::mul(Point x, Point y) const noexcept {
  if (!mul_.empty()) return mul_[x * elems_.size() + y];
  return static_cast<Point>(lookup_[key(ops_.mul(elems_[x], elems_[y]))]);
}

std::size_t SL2::element_order(Point x) const noexcept {
  std::size_t k = 1;
  for (Point y = x; y != one_; y = mul(y, x)) ++k;
  return k;
}

void SL2::build_sylows() {
  const std::size_t n = order();
  Subgroup t0;
  for (std::uint32_t x = 0; x < q(); ++x)
    t0.members.push_back(index(Mat2{field_.one(), {x}, field_.zero(), field_.one()}));
  std::sort(t0.members.begin(), t0.members.end());

  std::vector<std::vector<Point>> conjugates;
  for (Point h = 0; h < n; ++h) {
    std::vector<Point> c;
    c.reserve(t0.order());
    for (Point t : t0.members) c.push_back(conj(t, h));
    std::sort(c.begin(), c.end());
    if (c != t0.members) conjugates.push_back(std::move(c));
  }
  std::sort(conjugates.begin(), conjugates.end());
  conjugates.erase(std::unique(conjugates.begin(), conjugates.end()), conjugates.end());

  sylows_.push_back(std::move(t0));
  for (auto& c : conjugates) sylows_.push_back(Subgroup{std::move(c)});

  sylow_of_.assign(n, -1);
  for (std::size_t i = 0; i < sylows_.size(); ++i)
    for (Point x : sylows_[i].members)
      if (x != one_) sylow_of_[x] = static_cast<int>(i);
}

int SL2::sylow_id(const Subgroup& s) const {
  for (std::size_t i = 0; i < sylows_.size(); ++i)
    if (sylows_[i] == s) return static_cast<int>(i);
  return -1;
}

Subgroup SL2::normalizer(const Subgroup& s) const {
  Subgroup out;
  for (Point h = 0; h < order(); ++h) {
    bool ok = true;
    for (Point x : s.members)
      if (!s.contains(conj(x, h))) {
        ok = false;
        break;
      }
    if (ok) out.members.push_back(h);
  }
  return out;
}

std::vector<Mat2> SL2::normalizer_projective(const Subgroup& s) const {
  std::vector<Mat2> out;
  const std::uint32_t qq = q();
  for (std::uint32_t a = 0; a < qq; ++a)
    for (std::uint32_t b = 0; b < qq; ++b)
      for (std::uint32_t c = 0; c < qq; ++c)
        for (std::uint32_t d = 0; d < qq; ++d) {
          const Mat2 m{{a}, {b}, {c}, {d}};
          if (ops_.det(m).code == 0 || ops_.projective_normal(m) != m) continue;
          bool ok = true;
          for (Point x : s.members)
            if (!s.contains(index(ops_.conjugate(elems_[x], m)))) {
              ok = false;
              break;
            }
          if (ok) out.push_back(m);
        }
  return out;
}

std::vector<Point> SL2::coset(const Subgroup& s, Point g, Side side) const {
  std::vector<Point> pts;
  pts.reserve(s.order());
  for (Point t : s.members) pts.push_back(side == Side::Right ? mul(t, g) : mul(g, t));
  std::sort(pts.begin(), pts.end());
  return pts;
}

void SL2::build_blocks() {
  const std::size_t n = order();
  std::vector<std::vector<Point>> all;
  all.reserve(sylows_.size() * n / q());
  for (const auto& s : sylows_) {
    std::vector<char> seen(n, 0);
    for (Point g = 0; g < n; ++g) {
      if (seen[g]) continue;
      auto pts = coset(s, g, Side::Right);
      for (Point x : pts) seen[x] = 1;
      all.push_back(std::move(pts));
    }
  }
  std::sort(all.begin(), all.end());
  blocks_ = std::move(all);

  std::map<std::vector<Point>, BlockId> ids;
  for (BlockId b = 0; b < blocks_.size(); ++b) ids.emplace(blocks_[b], b);

  right_.assign(sylows_.size() * n, kNoBlock);
  left_.assign(sylows_.size() * n, kNoBlock);
  for (std::size_t i = 0; i < sylows_.size(); ++i) {
    for (Point g = 0; g < n; ++g) {
      if (right_[i * n + g] == kNoBlock) {
        const BlockId b = ids.at(coset(sylows_[i], g, Side::Right));
        for (Point x : blocks_[b]) right_[i * n + x] = b;
      }
      if (left_[i * n + g] == kNoBlock) {
        const BlockId b = ids.at(coset(sylows_[i], g, Side::Left));
        for (Point x : blocks_[b]) left_[i * n + x] = b;
      }
    }
  }
}

BlockId SL2::block_through(Point u, Point v) const noexcept {
  if (u == v) return kNoBlock;
  const int s = sylow_of_[mul(u, inv_[v])];
  if (s < 0) return kNoBlock;
  return right_coset(static_cast<std::size_t>(s), v);
}

std::optional<BlockId> SL2::find_block(std::span<const Point> points) const {
  if (points.size() != q()) return std::nullopt;
  const BlockId b = block_through(points[0], points[1]);
  if (b == kNoBlock) return std::nullopt;
  std::vector<Point> sorted(points.begin(), points.end());
  std::sort(sorted.begin(), sorted.end());
  if (sorted != blocks_[b]) return std::nullopt;
  return b;
}

std::size_t SL2::block_right_sylow(BlockId b) const noexcept {
  const auto& pts = blocks_[b];
  return static_cast<std::size_t>(sylow_of_[mul(pts[0], inv_[pts[1]])]);
}

std::size_t SL2::block_left_sylow(BlockId b) const noexcept {
  const auto& pts = blocks_[b];
  return static_cast<std::size_t>(sylow_of_[mul(inv_[pts[0]], pts[1])]);
}

}  // namespace slu
