#include "slu/ar_group.hpp"

#include "slu/error.hpp"

namespace slu {

ArGroup::ArGroup(const SL2& group) : g_(&group), e_(group.field().e()) {
  const MatOps& ops = g_->ops();
  const std::uint32_t q = g_->q();
  mat_lookup_.assign(static_cast<std::size_t>(q) * q * q * q, -1);
  for (std::uint32_t a = 0; a < q; ++a)
    for (std::uint32_t b = 0; b < q; ++b)
      for (std::uint32_t c = 0; c < q; ++c)
        for (std::uint32_t d = 0; d < q; ++d) {
          const Mat2 m{{a}, {b}, {c}, {d}};
          if (ops.det(m).code == 0 || ops.projective_normal(m) != m) continue;
          mat_lookup_[mat_key(m)] = static_cast<std::int32_t>(mats_.size());
          mats_.push_back(m);
        }

  const std::size_t n = g_->order();
  const std::size_t ns = g_->sylows().size();
  perms_.resize(semilinear_count() * n);
  sylow_img_.resize(semilinear_count() * ns);
  for (std::size_t i = 0; i < mats_.size(); ++i) {
    const Mat2 ainv = ops.inverse(mats_[i]);
    for (Point x = 0; x < n; ++x) {
      const Mat2 c = ops.mul(ops.mul(ainv, g_->elem(x)), mats_[i]);
      for (std::size_t l = 0; l < e_; ++l)
        perms_[(i * e_ + l) * n + x] = g_->index(ops.frobenius(c, static_cast<long long>(l)));
    }
  }
  for (std::size_t alpha = 0; alpha < semilinear_count(); ++alpha)
    for (std::size_t s = 0; s < ns; ++s) {
      // any nontrivial member identifies the image subgroup
      const Point x = g_->sylows()[s].members[0] == g_->one() ? g_->sylows()[s].members[1]
                                                              : g_->sylows()[s].members[0];
      sylow_img_[alpha * ns + s] =
          static_cast<std::uint32_t>(g_->sylow_of(perms_[alpha * n + x]));
    }
}

std::size_t ArGroup::mat_key(const Mat2& m) const noexcept {
  const std::size_t q = g_->q();
  return ((m.a.code * q + m.b.code) * q + m.c.code) * q + m.d.code;
}

std::size_t ArGroup::semilinear_index(const Mat2& mat, std::uint32_t frob) const {
  const Mat2 m = g_->ops().projective_normal(mat);
  const std::int32_t i = mat_lookup_[mat_key(m)];
  if (i < 0) throw Error(ErrorKind::BadMode, "singular matrix in semilinear part");
  return static_cast<std::size_t>(i) * e_ + frob % e_;
}

ArElem ArGroup::element(std::size_t alpha, Point h) const noexcept {
  return ArElem{mats_[alpha / e_], static_cast<std::uint32_t>(alpha % e_), h};
}

ArElem ArGroup::identity() const noexcept { return ArElem{g_->ops().identity(), 0, g_->one()}; }

ArElem ArGroup::gamma(const Mat2& a) const {
  return ArElem{g_->ops().projective_normal(a), 0, g_->one()};
}

ArElem ArGroup::rho(Point h) const noexcept { return ArElem{g_->ops().identity(), 0, h}; }

ArElem ArGroup::frobenius(std::uint32_t l) const noexcept {
  return ArElem{g_->ops().identity(), static_cast<std::uint32_t>(l % e_), g_->one()};
}

ArElem ArGroup::theta(Point h) const {
  const MatOps& ops = g_->ops();
  const Mat2& m = g_->elem(h);
  const Point r = g_->index(ops.mul(ops.inverse(m), ops.bar(m)));
  return ArElem{ops.projective_normal(m), 0, r};
}

// (a,l,h)(b,m,k) = (a phi^{-l}(b), l+m, phi^m(b^{-1} h b) k)
ArElem ArGroup::compose(const ArElem& s, const ArElem& t) const {
  const MatOps& ops = g_->ops();
  const long long l = s.frob;
  const Mat2 bl = ops.frobenius(t.mat, -l);
  const Mat2 mat = ops.projective_normal(ops.mul(s.mat, bl));
  const Mat2 hc = ops.frobenius(ops.conjugate(g_->elem(s.rmul), t.mat), t.frob);
  const Point r = g_->mul(g_->index(hc), t.rmul);
  return ArElem{mat, static_cast<std::uint32_t>((s.frob + t.frob) % e_), r};
}

ArElem ArGroup::inverse(const ArElem& t) const {
  const MatOps& ops = g_->ops();
  const long long l = t.frob;
  const Mat2 a2 = ops.projective_normal(ops.frobenius(ops.inverse(t.mat), l));
  const Mat2 c = ops.frobenius(ops.conjugate(g_->elem(t.rmul), a2), -l);
  const Point h2 = g_->inv(g_->index(c));
  return ArElem{a2, static_cast<std::uint32_t>((e_ - t.frob % e_) % e_), h2};
}

Point ArGroup::apply(const ArElem& t, Point x) const { return apply(alpha_of(t), t.rmul, x); }

BlockId ArGroup::apply_block(std::size_t alpha, Point h, BlockId b) const noexcept {
  const auto& pts = g_->block_points(b);
  const std::size_t s = semilinear_sylow(alpha, g_->block_right_sylow(b));
  return g_->right_coset(s, apply(alpha, h, pts[0]));
}

BlockId ArGroup::apply_block(const ArElem& t, BlockId b) const {
  return apply_block(alpha_of(t), t.rmul, b);
}

std::vector<Point> ArGroup::permutation(const ArElem& t) const {
  const std::size_t alpha = alpha_of(t);
  std::vector<Point> out(g_->order());
  for (Point x = 0; x < out.size(); ++x) out[x] = apply(alpha, t.rmul, x);
  return out;
}

std::vector<ArElem> ArGroup::enumerate() const {
  if (order() > kMaxEnumerate)
    throw Error(ErrorKind::TooLarge, "group of order " + std::to_string(order()) +
                                         " is too large to materialize");
  std::vector<ArElem> out;
  out.reserve(order());
  for_each([&](std::size_t alpha, Point h) { out.push_back(element(alpha, h)); });
  return out;
}

Point theta_apply(const SL2& g, Point h, Point x) {
  const MatOps& ops = g.ops();
  const Mat2& m = g.elem(h);
  return g.index(ops.mul(ops.mul(ops.inverse(m), g.elem(x)), ops.bar(m)));
}

}  // namespace slu
