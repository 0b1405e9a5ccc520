#pragma once

/// Small dense matrices over Z/m.
///
/// The group-theory side of the library works exclusively with matrices of
/// dimension at most ~16 over small prime-power moduli (2, 8, odd primes),
/// so entries are machine words kept canonical in [0, m). Inversion uses
/// unit-pivot Gaussian elimination, which succeeds precisely for matrices
/// invertible over Z/m when m is a prime power (the only moduli used here).

#include <cstdint>
#include <string>
#include <vector>

namespace galmax {

class MatMod {
 public:
  /// Zero matrix of dimension n over Z/m. Requires 1 <= n <= 64,
  /// 2 <= m <= 2^20 (keeps 64-bit accumulators exact).
  MatMod(std::uint32_t n, std::uint32_t m);

  static MatMod identity(std::uint32_t n, std::uint32_t m);

  std::uint32_t dim() const { return n_; }
  std::uint32_t modulus() const { return m_; }

  std::uint32_t at(std::uint32_t i, std::uint32_t j) const {
    return a_[i * n_ + j];
  }
  /// Assigns entry (i, j); the value is reduced into [0, m).
  void set(std::uint32_t i, std::uint32_t j, std::int64_t v);

  bool operator==(const MatMod& o) const = default;

  MatMod operator*(const MatMod& o) const;
  MatMod operator+(const MatMod& o) const;
  MatMod operator-(const MatMod& o) const;
  MatMod scaled(std::int64_t c) const;
  MatMod transpose() const;
  MatMod pow(std::uint64_t e) const;

  /// Entrywise reduction to a divisor modulus m2 | m.
  MatMod reduced(std::uint32_t m2) const;

  /// Matrix inverse. Throws std::domain_error when the matrix is singular
  /// (no unit pivot available in some column).
  MatMod inverse() const;

  bool is_identity() const;

  /// Column-vector action: w = A v.
  std::vector<std::uint32_t> apply(const std::vector<std::uint32_t>& v) const;

  /// Mixed-radix encoding of a vector in (Z/m)^n as an integer < m^n,
  /// for orbit hashing. Requires m^n to fit in 64 bits.
  std::uint64_t encode_vector(const std::vector<std::uint32_t>& v) const;
  std::vector<std::uint32_t> decode_vector(std::uint64_t code) const;

  /// [A, B] = A B A^{-1} B^{-1} (group commutator).
  static MatMod commutator(const MatMod& a, const MatMod& b);

  std::string to_string() const;

 private:
  std::uint32_t n_, m_;
  std::vector<std::uint32_t> a_; // row-major
};

} // namespace galmax
