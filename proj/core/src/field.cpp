#include "slu/field.hpp"

#include <string>

#include "slu/error.hpp"

namespace slu {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::NotSquareOrder: return "NotSquareOrder";
    case ErrorKind::EvenOrder: return "EvenOrder";
    case ErrorKind::BadMode: return "BadMode";
    case ErrorKind::BadBlockSize: return "BadBlockSize";
    case ErrorKind::AxiomViolation: return "AxiomViolation";
    case ErrorKind::InvalidParallelism: return "InvalidParallelism";
    case ErrorKind::Timeout: return "Timeout";
    case ErrorKind::Parse: return "Parse";
  }
  return "Unknown";
}

bool is_prime(unsigned n) noexcept {
  if (n < 2) return false;
  for (unsigned d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace {

using Poly = std::vector<unsigned>;  // low coefficient first

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

unsigned inv_mod(unsigned a, unsigned p) {
  for (unsigned x = 1; x < p; ++x)
    if (1ull * a * x % p == 1) return x;
  return 0;
}

// Remainder of f modulo g over GF(p); g nonzero.
Poly poly_mod(Poly f, const Poly& g, unsigned p) {
  trim(f);
  const unsigned long long pp = p;
  const unsigned long long lead_inv = inv_mod(g.back(), p);
  while (f.size() >= g.size()) {
    const unsigned long long factor = f.back() * lead_inv % pp;
    const std::size_t shift = f.size() - g.size();
    for (std::size_t i = 0; i < g.size(); ++i)
      f[shift + i] = static_cast<unsigned>((f[shift + i] + pp - factor * g[i] % pp) % pp);
    trim(f);
  }
  return f;
}

// Trial division by every monic polynomial of degree 1..deg/2.
bool irreducible(const Poly& monic, unsigned p) {
  const unsigned deg = static_cast<unsigned>(monic.size()) - 1;
  for (unsigned d = 1; d <= deg / 2; ++d) {
    unsigned long long count = 1;
    for (unsigned i = 0; i < d; ++i) count *= p;
    for (unsigned long long k = 0; k < count; ++k) {
      Poly g(d + 1);
      unsigned long long rest = k;
      for (unsigned i = 0; i < d; ++i) {
        g[i] = static_cast<unsigned>(rest % p);
        rest /= p;
      }
      g[d] = 1;
      if (poly_mod(monic, g, p).empty()) return false;
    }
  }
  return true;
}

}  // namespace

Field::Field(unsigned p, unsigned e) : p_(p), e_(e) {
  if (!is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
  if (e == 0) throw Error(ErrorKind::TooLarge, "extension degree must be positive");
  unsigned long long q = 1;
  for (unsigned i = 0; i < e; ++i) {
    pw_.push_back(static_cast<std::uint32_t>(q));
    q *= p;
    if (q > kMaxOrder)
      throw Error(ErrorKind::TooLarge,
                  std::to_string(p) + "^" + std::to_string(e) + " exceeds 2^16");
  }
  q_ = static_cast<std::uint32_t>(q);

  neg_.resize(q_);
  for (std::uint32_t a = 0; a < q_; ++a) {
    std::uint32_t r = 0;
    for (unsigned i = 0; i < e_; ++i) {
      const unsigned c = (a / pw_[i]) % p_;
      r += ((p_ - c) % p_) * pw_[i];
    }
    neg_[a] = r;
  }

  // Candidates (c0, ..., c_{e-1}) in lexicographic order, c0 most significant.
  const std::uint32_t order = q_ - 1;
  for (std::uint32_t k = 0; k < q_; ++k) {
    Poly m(e_);
    std::uint32_t rest = k;
    for (unsigned i = e_; i-- > 0;) {
      m[i] = rest % p_;
      rest /= p_;
    }
    if (m[0] == 0) continue;

    // Powers of x modulo the candidate, as element codes.
    std::vector<FieldElem> powers;
    powers.reserve(order);
    std::vector<unsigned> cur(e_, 0);
    cur[0] = 1;
    bool primitive = true;
    for (std::uint32_t step = 0; step < order; ++step) {
      std::uint32_t code = 0;
      for (unsigned i = 0; i < e_; ++i) code += cur[i] * pw_[i];
      if (step > 0 && code == 1) {
        primitive = false;
        break;
      }
      powers.push_back(FieldElem{code});
      // cur <- x * cur mod (x^e + m)
      const unsigned top = cur[e_ - 1];
      const unsigned long long pp = p_;
      for (unsigned i = e_; i-- > 1;)
        cur[i] = static_cast<unsigned>((cur[i - 1] + pp - 1ull * top * m[i] % pp) % pp);
      cur[0] = static_cast<unsigned>((pp - 1ull * top * m[0] % pp) % pp);
    }
    if (!primitive) continue;
    Poly monic = m;
    monic.push_back(1);
    if (!irreducible(monic, p_)) continue;

    modulus_ = m;
    exp_ = std::move(powers);
    break;
  }

  log_.assign(q_, 0);
  for (std::uint32_t k = 0; k < order; ++k) log_[exp_[k].code] = k;

  if (q_ <= 256) {
    add_.resize(static_cast<std::size_t>(q_) * q_);
    for (std::uint32_t a = 0; a < q_; ++a)
      for (std::uint32_t b = 0; b < q_; ++b)
        add_[a * q_ + b] = static_cast<std::uint16_t>(add_digits(a, b));
  }

  square_.assign(q_, 0);
  square_[0] = 1;
  for (std::uint32_t k = 0; k < order; k += 2) square_[exp_[k].code] = 1;
  if (p_ == 2)
    for (auto& s : square_) s = 1;
}

std::uint32_t Field::add_digits(std::uint32_t a, std::uint32_t b) const noexcept {
  std::uint32_t r = 0;
  for (unsigned i = 0; i < e_; ++i) {
    const unsigned c = ((a / pw_[i]) % p_ + (b / pw_[i]) % p_) % p_;
    r += c * pw_[i];
  }
  return r;
}

FieldElem Field::elem(std::uint32_t code) const {
  if (code >= q_) throw Error(ErrorKind::TooLarge, "field element code out of range");
  return FieldElem{code};
}

FieldElem Field::from_int(long long v) const {
  const long long r = ((v % static_cast<long long>(p_)) + p_) % p_;
  return FieldElem{static_cast<std::uint32_t>(r)};
}

FieldElem Field::add(FieldElem a, FieldElem b) const noexcept {
  if (!add_.empty()) return FieldElem{add_[a.code * q_ + b.code]};
  return FieldElem{add_digits(a.code, b.code)};
}

FieldElem Field::mul(FieldElem a, FieldElem b) const noexcept {
  if (a.code == 0 || b.code == 0) return zero();
  const std::uint32_t s = log_[a.code] + log_[b.code];
  return exp_[s >= q_ - 1 ? s - (q_ - 1) : s];
}

FieldElem Field::inv(FieldElem a) const {
  if (a.code == 0) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
  const std::uint32_t l = log_[a.code];
  return exp_[l == 0 ? 0 : q_ - 1 - l];
}

FieldElem Field::pow(FieldElem a, long long k) const {
  if (a.code == 0) {
    if (k < 0) throw Error(ErrorKind::DivisionByZero, "negative power of zero");
    return k == 0 ? one() : zero();
  }
  return exp(static_cast<long long>(log_[a.code]) * (k % static_cast<long long>(q_ - 1)));
}

FieldElem Field::exp(long long k) const noexcept {
  const long long n = q_ - 1;
  return exp_[static_cast<std::size_t>(((k % n) + n) % n)];
}

std::uint32_t Field::log(FieldElem a) const {
  if (a.code == 0) throw Error(ErrorKind::DivisionByZero, "log of zero");
  return log_[a.code];
}

FieldElem Field::frobenius(FieldElem a, long long l) const noexcept {
  if (a.code == 0) return a;
  const long long r = ((l % static_cast<long long>(e_)) + e_) % e_;
  unsigned long long k = log_[a.code];
  for (long long i = 0; i < r; ++i) k = k * p_ % (q_ - 1);
  return exp_[k];
}

FieldElem Field::bar(FieldElem a) const {
  if (!has_half_subfield())
    throw Error(ErrorKind::NotSquareOrder, "GF(" + std::to_string(q_) + ") has no index-2 subfield");
  return frobenius(a, e_ / 2);
}

bool Field::in_subfield(FieldElem a) const { return bar(a) == a; }

std::uint32_t Field::subfield_order() const {
  if (!has_half_subfield())
    throw Error(ErrorKind::NotSquareOrder, "GF(" + std::to_string(q_) + ") has no index-2 subfield");
  return pw_[e_ / 2];
}

unsigned Field::coefficient(FieldElem a, unsigned i) const noexcept {
  return (a.code / pw_[i]) % p_;
}

bool lemma_fqqq_check(const Field& f2) {
  for (std::uint32_t xc = 1; xc < f2.q(); ++xc) {
    const FieldElem x{xc};
    const FieldElem norm = f2.mul(x, f2.bar(x));
    for (std::uint32_t cc = 1; cc < f2.q(); ++cc) {
      const FieldElem c{cc};
      if (!f2.in_subfield(c)) continue;
      if (f2.mul(c, c) == norm && !f2.is_square(x)) return false;
    }
  }
  return true;
}

}  // namespace slu
