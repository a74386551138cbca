#include <gtest/gtest.h>

#include <numeric>
#include <vector>

#include "slu/error.hpp"
#include "slu/field.hpp"
#include "support.hpp"

namespace slu {
namespace {

// Polynomials over GF(p) as coefficient vectors, constant term first.
struct PolyField {
  unsigned p, e;
  std::vector<unsigned> low;  // monic modulus x^e + sum low[i] x^i

  std::vector<unsigned> digits(std::uint32_t code) const {
    std::vector<unsigned> d(e);
    for (unsigned i = 0; i < e; ++i, code /= p) d[i] = code % p;
    return d;
  }
  std::uint32_t code(const std::vector<unsigned>& d) const {
    std::uint32_t c = 0;
    for (unsigned i = e; i-- > 0;) c = c * p + d[i];
    return c;
  }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    const auto x = digits(a), y = digits(b);
    std::vector<unsigned> prod(2 * e, 0);
    for (unsigned i = 0; i < e; ++i)
      for (unsigned j = 0; j < e; ++j) prod[i + j] = (prod[i + j] + x[i] * y[j]) % p;
    for (unsigned k = 2 * e - 1; k >= e; --k) {
      const unsigned top = prod[k];
      prod[k] = 0;
      for (unsigned i = 0; i < e; ++i) prod[k - e + i] = (prod[k - e + i] + (p - low[i]) * top) % p;
    }
    prod.resize(e);
    return code(prod);
  }
  std::uint32_t x() const { return e == 1 ? (p - low[0]) % p : p; }
};

std::vector<unsigned> prime_factors(std::uint32_t n) {
  std::vector<unsigned> out;
  for (unsigned f = 2; f * f <= n; ++f)
    if (n % f == 0) {
      out.push_back(f);
      while (n % f == 0) n /= f;
    }
  if (n > 1) out.push_back(n);
  return out;
}

std::uint32_t power(const PolyField& f, std::uint32_t a, std::uint64_t k) {
  std::uint32_t r = 1;
  for (; k; k >>= 1, a = f.mul(a, a))
    if (k & 1) r = f.mul(r, a);
  return r;
}

// First primitive modulus in lexicographic order of (c0, ..., c_{e-1}).
std::vector<unsigned> oracle_modulus(unsigned p, unsigned e) {
  std::uint32_t q = 1;
  for (unsigned i = 0; i < e; ++i) q *= p;
  const auto factors = prime_factors(q - 1);
  for (std::uint32_t t = 0; t < q; ++t) {
    std::vector<unsigned> low(e);
    std::uint32_t r = t;
    for (unsigned i = e; i-- > 0; r /= p) low[i] = r % p;
    if (low[0] == 0) continue;
    const PolyField f{p, e, low};
    const auto x = f.x();
    if (power(f, x, q - 1) != 1) continue;
    bool primitive = true;
    for (auto r2 : factors) primitive = primitive && power(f, x, (q - 1) / r2) != 1;
    if (primitive) return low;
  }
  return {};
}

struct Order {
  unsigned p, e;
};
const Order kOrders[] = {{2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1}, {2, 3}, {3, 2}, {11, 1}, {13, 1},
                         {2, 4}, {17, 1}, {5, 2}, {3, 3}, {2, 5}, {7, 2}, {2, 6}, {3, 4}, {11, 2},
                         {5, 3}, {13, 2}, {2, 8}, {3, 5}};

class FieldOrder : public ::testing::TestWithParam<Order> {};

TEST_P(FieldOrder, ModulusIsLeastPrimitive) {
  const auto [p, e] = GetParam();
  const Field f(p, e);
  EXPECT_EQ(f.modulus(), oracle_modulus(p, e));
}

TEST_P(FieldOrder, MultiplicationMatchesPolynomialOracle) {
  const auto [p, e] = GetParam();
  const Field f(p, e);
  const PolyField poly{p, e, f.modulus()};
  EXPECT_EQ(f.generator().code, poly.x());
  const std::uint32_t q = f.q();
  if (q <= 64) {
    for (std::uint32_t a = 0; a < q; ++a)
      for (std::uint32_t b = 0; b < q; ++b) ASSERT_EQ(f.mul(f.elem(a), f.elem(b)).code, poly.mul(a, b));
  } else {
    for (int i = 0; i < 20000; ++i) {
      const auto a = static_cast<std::uint32_t>(test::pick(q)), b = static_cast<std::uint32_t>(test::pick(q));
      ASSERT_EQ(f.mul(f.elem(a), f.elem(b)).code, poly.mul(a, b));
    }
  }
}

TEST_P(FieldOrder, Axioms) {
  const auto [p, e] = GetParam();
  const Field f(p, e);
  const std::uint32_t q = f.q();
  auto check = [&](FieldElem a, FieldElem b, FieldElem c) {
    ASSERT_EQ(f.add(a, b), f.add(b, a));
    ASSERT_EQ(f.mul(a, b), f.mul(b, a));
    ASSERT_EQ(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
    ASSERT_EQ(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
    ASSERT_EQ(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
  };
  if (q <= 16) {
    for (std::uint32_t a = 0; a < q; ++a)
      for (std::uint32_t b = 0; b < q; ++b)
        for (std::uint32_t c = 0; c < q; ++c) check(f.elem(a), f.elem(b), f.elem(c));
  } else {
    for (int i = 0; i < 20000; ++i)
      check(f.elem(static_cast<std::uint32_t>(test::pick(q))), f.elem(static_cast<std::uint32_t>(test::pick(q))),
            f.elem(static_cast<std::uint32_t>(test::pick(q))));
  }
  for (std::uint32_t a = 0; a < q; ++a) {
    const auto x = f.elem(a);
    EXPECT_EQ(f.add(x, f.zero()), x);
    EXPECT_EQ(f.mul(x, f.one()), x);
    EXPECT_EQ(f.add(x, f.neg(x)), f.zero());
    EXPECT_EQ(f.sub(x, x), f.zero());
    if (a != 0) {
      EXPECT_EQ(f.mul(x, f.inv(x)), f.one());
      EXPECT_EQ(f.exp(f.log(x)), x);
      EXPECT_EQ(f.pow(x, q - 1), f.one());
    }
    EXPECT_EQ(f.frobenius(x, e), x);
    EXPECT_EQ(f.frobenius(x, 1), f.pow(x, p));
    EXPECT_EQ(f.frobenius(f.frobenius(x, -1), 1), x);
  }
}

TEST_P(FieldOrder, GeneratorHasFullOrder) {
  const auto [p, e] = GetParam();
  const Field f(p, e);
  std::uint32_t order = 1;
  for (auto x = f.generator(); x != f.one(); x = f.mul(x, f.generator())) ++order;
  EXPECT_EQ(order, f.q() - 1);
}

TEST_P(FieldOrder, SquareCount) {
  const auto [p, e] = GetParam();
  const Field f(p, e);
  std::vector<char> sq(f.q(), 0);
  for (std::uint32_t a = 0; a < f.q(); ++a) sq[f.mul(f.elem(a), f.elem(a)).code] = 1;
  std::uint32_t count = 0;
  for (std::uint32_t a = 0; a < f.q(); ++a) {
    EXPECT_EQ(f.is_square(f.elem(a)), sq[a] != 0) << a;
    count += sq[a];
  }
  EXPECT_EQ(count, p == 2 ? f.q() : (f.q() + 1) / 2);
}

TEST_P(FieldOrder, BarIsTheSubfieldInvolution) {
  const auto [p, e] = GetParam();
  const Field f(p, e);
  if (!f.has_half_subfield()) {
    EXPECT_THROW(f.bar(f.one()), Error);
    return;
  }
  std::uint32_t fixed = 0;
  for (std::uint32_t a = 0; a < f.q(); ++a) {
    const auto x = f.elem(a);
    const auto y = f.elem((a * 7 + 3) % f.q());
    EXPECT_EQ(f.bar(f.bar(x)), x);
    EXPECT_EQ(f.bar(f.mul(x, y)), f.mul(f.bar(x), f.bar(y)));
    EXPECT_EQ(f.bar(f.add(x, y)), f.add(f.bar(x), f.bar(y)));
    EXPECT_TRUE(f.in_subfield(f.mul(x, f.bar(x))));
    EXPECT_EQ(f.in_subfield(x), f.bar(x) == x);
    fixed += f.bar(x) == x;
  }
  EXPECT_EQ(fixed, f.subfield_order());
  EXPECT_EQ(f.subfield_order() * f.subfield_order(), f.q());
}

INSTANTIATE_TEST_SUITE_P(Orders, FieldOrder, ::testing::ValuesIn(kOrders), [](const auto& info) {
  return "p" + std::to_string(info.param.p) + "e" + std::to_string(info.param.e);
});

TEST(Field, KnownModuli) {
  EXPECT_EQ(Field(2, 2).modulus(), (std::vector<unsigned>{1, 1}));
  EXPECT_EQ(Field(3, 2).modulus(), (std::vector<unsigned>{2, 1}));
  EXPECT_EQ(Field(5, 1).modulus(), (std::vector<unsigned>{2}));
}

TEST(Field, SquareNormLemmaHoldsForSquareOrdersUpTo169) {
  for (auto [p, e] : {Order{2, 2}, Order{3, 2}, Order{2, 4}, Order{5, 2}, Order{7, 2}, Order{2, 6}, Order{3, 4},
                      Order{11, 2}, Order{13, 2}}) {
    EXPECT_TRUE(lemma_fqqq_check(Field(p, e))) << p << "^" << e;
  }
  EXPECT_THROW(lemma_fqqq_check(Field(3, 1)), Error);
}

TEST(Field, Errors) {
  auto kind = [](auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::Parse;
  };
  EXPECT_EQ(kind([] { Field(4, 1); }), ErrorKind::NotPrime);
  EXPECT_EQ(kind([] { Field(1, 1); }), ErrorKind::NotPrime);
  EXPECT_EQ(kind([] { Field(2, 17); }), ErrorKind::TooLarge);
  const Field f(5, 1);
  EXPECT_EQ(kind([&] { f.inv(f.zero()); }), ErrorKind::DivisionByZero);
  EXPECT_EQ(kind([&] { f.bar(f.one()); }), ErrorKind::NotSquareOrder);
  EXPECT_EQ(kind([&] { f.elem(5); }), ErrorKind::TooLarge);
}

TEST(Field, PrimeTest) {
  std::vector<unsigned> got;
  for (unsigned n = 0; n < 30; ++n)
    if (is_prime(n)) got.push_back(n);
  EXPECT_EQ(got, (std::vector<unsigned>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29}));
}

}  // namespace
}  // namespace slu
