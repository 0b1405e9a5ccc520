#include "galmax/matmod.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace galmax {

MatMod::MatMod(std::uint32_t n, std::uint32_t m) : n_(n), m_(m), a_(n * n, 0) {
  if (n < 1 || n > 64) throw std::domain_error("MatMod: dimension out of range");
  if (m < 2 || m > (1u << 20)) throw std::domain_error("MatMod: modulus out of range");
}

MatMod MatMod::identity(std::uint32_t n, std::uint32_t m) {
  MatMod r(n, m);
  for (std::uint32_t i = 0; i < n; ++i) r.a_[i * n + i] = 1 % m;
  return r;
}

void MatMod::set(std::uint32_t i, std::uint32_t j, std::int64_t v) {
  const std::int64_t mm = static_cast<std::int64_t>(m_);
  std::int64_t r = v % mm;
  if (r < 0) r += mm;
  a_[i * n_ + j] = static_cast<std::uint32_t>(r);
}

MatMod MatMod::operator*(const MatMod& o) const {
  if (n_ != o.n_ || m_ != o.m_) throw std::domain_error("MatMod*: shape/modulus mismatch");
  MatMod r(n_, m_);
  for (std::uint32_t i = 0; i < n_; ++i) {
    for (std::uint32_t k = 0; k < n_; ++k) {
      const std::uint64_t aik = a_[i * n_ + k];
      if (aik == 0) continue;
      for (std::uint32_t j = 0; j < n_; ++j) {
        // n * (m-1)^2 < 2^64 holds for n <= 64, m <= 2^20; accumulate then
        // reduce once per row sweep via the running store.
        std::uint64_t acc = r.a_[i * n_ + j] + aik * o.a_[k * n_ + j];
        r.a_[i * n_ + j] = static_cast<std::uint32_t>(acc % m_);
      }
    }
  }
  return r;
}

MatMod MatMod::operator+(const MatMod& o) const {
  if (n_ != o.n_ || m_ != o.m_) throw std::domain_error("MatMod+: shape/modulus mismatch");
  MatMod r(n_, m_);
  for (std::size_t i = 0; i < a_.size(); ++i) {
    r.a_[i] = static_cast<std::uint32_t>((static_cast<std::uint64_t>(a_[i]) + o.a_[i]) % m_);
  }
  return r;
}

MatMod MatMod::operator-(const MatMod& o) const {
  if (n_ != o.n_ || m_ != o.m_) throw std::domain_error("MatMod-: shape/modulus mismatch");
  MatMod r(n_, m_);
  for (std::size_t i = 0; i < a_.size(); ++i) {
    r.a_[i] = static_cast<std::uint32_t>((static_cast<std::uint64_t>(a_[i]) + m_ - o.a_[i]) % m_);
  }
  return r;
}

MatMod MatMod::scaled(std::int64_t c) const {
  MatMod r(n_, m_);
  const std::int64_t mm = static_cast<std::int64_t>(m_);
  std::int64_t cc = c % mm;
  if (cc < 0) cc += mm;
  for (std::size_t i = 0; i < a_.size(); ++i) {
    r.a_[i] = static_cast<std::uint32_t>(
        (static_cast<std::uint64_t>(a_[i]) * static_cast<std::uint64_t>(cc)) % m_);
  }
  return r;
}

MatMod MatMod::transpose() const {
  MatMod r(n_, m_);
  for (std::uint32_t i = 0; i < n_; ++i) {
    for (std::uint32_t j = 0; j < n_; ++j) r.a_[j * n_ + i] = a_[i * n_ + j];
  }
  return r;
}

MatMod MatMod::pow(std::uint64_t e) const {
  MatMod base = *this, r = identity(n_, m_);
  while (e > 0) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

MatMod MatMod::reduced(std::uint32_t m2) const {
  if (m2 < 2 || m_ % m2 != 0) {
    throw std::domain_error("MatMod::reduced: target modulus must divide current");
  }
  MatMod r(n_, m2);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] % m2;
  return r;
}

namespace {

/// Inverse of a unit u mod m for prime-power m: lift the inverse mod the
/// prime through Newton iterations. For the moduli here (m <= 2^20), plain
/// extended Euclid on machine words is simplest.
std::uint32_t unit_inverse(std::uint32_t u, std::uint32_t m) {
  std::int64_t t = 0, new_t = 1, r = m, new_r = u;
  while (new_r != 0) {
    const std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t; new_t = tmp;
    tmp = r - q * new_r;
    r = new_r; new_r = tmp;
  }
  if (r != 1) throw std::domain_error("unit_inverse: not a unit");
  if (t < 0) t += m;
  return static_cast<std::uint32_t>(t);
}

} // namespace

MatMod MatMod::inverse() const {
  // Gauss–Jordan with unit pivots. Over Z/p^k a matrix is invertible iff it
  // is invertible mod p, in which case every elimination column contains a
  // unit at or below the diagonal; failing to find one proves singularity.
  const std::uint32_t n = n_;
  std::vector<std::uint64_t> w(n * 2 * n, 0);
  auto W = [&](std::uint32_t i, std::uint32_t j) -> std::uint64_t& {
    return w[i * 2 * n + j];
  };
  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t j = 0; j < n; ++j) W(i, j) = a_[i * n + j];
    W(i, n + i) = 1 % m_;
  }
  for (std::uint32_t col = 0; col < n; ++col) {
    std::uint32_t piv = col;
    while (piv < n && std::gcd<std::uint64_t>(W(piv, col), m_) != 1) ++piv;
    if (piv == n) throw std::domain_error("MatMod::inverse: singular matrix");
    if (piv != col) {
      for (std::uint32_t j = 0; j < 2 * n; ++j) std::swap(W(piv, j), W(col, j));
    }
    const std::uint64_t inv = unit_inverse(static_cast<std::uint32_t>(W(col, col)), m_);
    for (std::uint32_t j = 0; j < 2 * n; ++j) W(col, j) = (W(col, j) * inv) % m_;
    for (std::uint32_t i = 0; i < n; ++i) {
      if (i == col || W(i, col) == 0) continue;
      const std::uint64_t c = W(i, col);
      for (std::uint32_t j = 0; j < 2 * n; ++j) {
        W(i, j) = (W(i, j) + (m_ - c % m_) * W(col, j)) % m_;
      }
    }
  }
  MatMod r(n, m_);
  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t j = 0; j < n; ++j) {
      r.a_[i * n + j] = static_cast<std::uint32_t>(W(i, n + j));
    }
  }
  return r;
}

bool MatMod::is_identity() const { return *this == identity(n_, m_); }

std::vector<std::uint32_t> MatMod::apply(const std::vector<std::uint32_t>& v) const {
  if (v.size() != n_) throw std::domain_error("MatMod::apply: size mismatch");
  std::vector<std::uint32_t> w(n_, 0);
  for (std::uint32_t i = 0; i < n_; ++i) {
    std::uint64_t acc = 0;
    for (std::uint32_t j = 0; j < n_; ++j) {
      acc += static_cast<std::uint64_t>(a_[i * n_ + j]) * v[j];
    }
    w[i] = static_cast<std::uint32_t>(acc % m_);
  }
  return w;
}

std::uint64_t MatMod::encode_vector(const std::vector<std::uint32_t>& v) const {
  std::uint64_t code = 0;
  for (std::uint32_t i = n_; i-- > 0;) code = code * m_ + (v[i] % m_);
  return code;
}

std::vector<std::uint32_t> MatMod::decode_vector(std::uint64_t code) const {
  std::vector<std::uint32_t> v(n_);
  for (std::uint32_t i = 0; i < n_; ++i) {
    v[i] = static_cast<std::uint32_t>(code % m_);
    code /= m_;
  }
  return v;
}

MatMod MatMod::commutator(const MatMod& a, const MatMod& b) {
  return a * b * a.inverse() * b.inverse();
}

std::string MatMod::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::uint32_t i = 0; i < n_; ++i) {
    os << (i ? "; " : "");
    for (std::uint32_t j = 0; j < n_; ++j) os << (j ? " " : "") << at(i, j);
  }
  os << "] mod " << m_;
  return os.str();
}

} // namespace galmax
