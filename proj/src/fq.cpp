#include "galmax/fq.hpp"

#include <stdexcept>

#include "galmax/arith.hpp"

namespace galmax::fq {

namespace {

std::uint64_t pow_u64_checked(std::uint64_t p, int d) {
  std::uint64_t q = 1;
  for (int i = 0; i < d; ++i) {
    if (q > (std::uint64_t(1) << 40)) throw std::invalid_argument("field too large");
    q *= p;
  }
  return q;
}

}  // namespace

Fq::Fq(std::uint64_t p, int d, std::uint64_t seed) : p_(p), d_(d) {
  if (d < 1 || d > 3) throw std::invalid_argument("field degree must be 1..3");
  if (p < 2 || p > (std::uint64_t(1) << 31)) throw std::invalid_argument("field characteristic out of range");
  if (!arith::is_prime_u64(p)) throw std::invalid_argument("field characteristic must be prime");
  q_ = pow_u64_checked(p, d);
  xpow_ = {zero(), zero()};
  if (d == 1) {
    minpoly_ = {0, 1};
    return;
  }
  const PolyZ m = arith::find_irreducible(p, d, seed);
  minpoly_.assign(d + 1, 0);
  for (int i = 0; i <= d; ++i)
    minpoly_[i] = i < static_cast<int>(m.size()) ? static_cast<std::uint32_t>(m[i].get_ui()) : 0;
  // x^d = -(m_0 + m_1 x + ... + m_{d-1} x^{d-1})
  Elt xd = zero();
  for (int i = 0; i < d; ++i) xd[i] = static_cast<std::uint32_t>((p_ - minpoly_[i]) % p_);
  xpow_[0] = xd;
  if (d == 3) {
    // x^4 = x * x^3
    Elt x4 = zero();
    std::uint64_t carry = xd[2];  // coefficient multiplying x^3 after the shift
    x4[1] = xd[0];
    x4[2] = xd[1];
    for (int i = 0; i < d; ++i) x4[i] = static_cast<std::uint32_t>((x4[i] + carry * xpow_[0][i]) % p_);
    xpow_[1] = x4;
  }
}

bool Fq::is_zero(const Elt& a) const { return a[0] == 0 && a[1] == 0 && a[2] == 0; }

Fq::Elt Fq::from_index(std::uint64_t idx) const {
  Elt e = zero();
  for (int i = 0; i < d_; ++i) {
    e[i] = static_cast<std::uint32_t>(idx % p_);
    idx /= p_;
  }
  return e;
}

std::uint64_t Fq::index(const Elt& a) const {
  std::uint64_t idx = 0;
  for (int i = d_ - 1; i >= 0; --i) idx = idx * p_ + a[i];
  return idx;
}

Fq::Elt Fq::from_integer(const BigInt& n) const {
  const BigInt r = mod_floor(n, BigInt(static_cast<unsigned long>(p_)));
  Elt e = zero();
  e[0] = static_cast<std::uint32_t>(r.get_ui());
  return e;
}

Fq::Elt Fq::add(const Elt& a, const Elt& b) const {
  Elt r = zero();
  for (int i = 0; i < d_; ++i) {
    std::uint64_t s = std::uint64_t(a[i]) + b[i];
    r[i] = static_cast<std::uint32_t>(s >= p_ ? s - p_ : s);
  }
  return r;
}

Fq::Elt Fq::sub(const Elt& a, const Elt& b) const {
  Elt r = zero();
  for (int i = 0; i < d_; ++i) {
    std::uint64_t s = std::uint64_t(a[i]) + p_ - b[i];
    r[i] = static_cast<std::uint32_t>(s >= p_ ? s - p_ : s);
  }
  return r;
}

Fq::Elt Fq::neg(const Elt& a) const { return sub(zero(), a); }

Fq::Elt Fq::mul(const Elt& a, const Elt& b) const {
  if (d_ == 1) {
    return {static_cast<std::uint32_t>((std::uint64_t(a[0]) * b[0]) % p_), 0, 0};
  }
  // Schoolbook convolution: degree <= 2d-2 <= 4.
  std::uint64_t conv[5] = {0, 0, 0, 0, 0};
  for (int i = 0; i < d_; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < d_; ++j) conv[i + j] += std::uint64_t(a[i]) * b[j] % p_;
  }
  Elt r = zero();
  for (int i = 0; i < d_; ++i) r[i] = static_cast<std::uint32_t>(conv[i] % p_);
  for (int k = d_; k <= 2 * d_ - 2; ++k) {
    const std::uint64_t c = conv[k] % p_;
    if (c == 0) continue;
    const Elt& fold = xpow_[k - d_];
    for (int i = 0; i < d_; ++i) r[i] = static_cast<std::uint32_t>((r[i] + c * fold[i]) % p_);
  }
  return r;
}

Fq::Elt Fq::pow(Elt base, BigInt exp) const {
  if (exp < 0) throw std::invalid_argument("negative exponent");
  Elt acc = one();
  while (exp > 0) {
    if (mpz_odd_p(exp.get_mpz_t())) acc = mul(acc, base);
    base = mul(base, base);
    exp >>= 1;
  }
  return acc;
}

bool Fq::is_square(const Elt& a) const {
  if (is_zero(a)) return true;
  if (p_ == 2) return true;  // Frobenius is surjective on squares in char 2
  const BigInt e = (BigInt(static_cast<unsigned long>(q_)) - 1) / 2;
  const Elt r = pow(a, e);
  return r == one();
}

}  // namespace galmax::fq
