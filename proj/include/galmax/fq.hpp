#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "galmax/bigint.hpp"

namespace galmax::fq {

/// Arithmetic in a small finite field F_{p^d} with d <= 3, suitable for
/// exhaustive point enumeration. Elements are coefficient vectors of length d
/// (ascending powers of the generator), each reduced into [0, p).
///
/// The modulus polynomial is a monic irreducible of degree d produced
/// deterministically from (p, d, seed); all operations are independent of the
/// choice of modulus in the quantities this project consumes (cardinalities,
/// quadratic-residue counts), and determinism of the representation itself is
/// guaranteed by fixing the seed.
class Fq {
 public:
  using Elt = std::array<std::uint32_t, 3>;

  Fq(std::uint64_t p, int d, std::uint64_t seed = 0);

  std::uint64_t p() const { return p_; }
  int d() const { return d_; }
  /// Field cardinality q = p^d.
  std::uint64_t q() const { return q_; }
  /// Modulus polynomial coefficients (ascending, length d+1, monic); for d = 1
  /// this is x - 0 = x, i.e. unused.
  const std::vector<std::uint32_t>& minpoly() const { return minpoly_; }

  Elt zero() const { return {0, 0, 0}; }
  Elt one() const { return d_ >= 1 ? Elt{1, 0, 0} : Elt{0, 0, 0}; }
  bool is_zero(const Elt& a) const;

  /// Mixed-radix bijection between elements and [0, q): index = sum c_i p^i.
  Elt from_index(std::uint64_t idx) const;
  std::uint64_t index(const Elt& a) const;

  /// Embeds an integer (e.g. a curve coefficient) into the prime field.
  Elt from_integer(const BigInt& n) const;

  Elt add(const Elt& a, const Elt& b) const;
  Elt sub(const Elt& a, const Elt& b) const;
  Elt neg(const Elt& a) const;
  Elt mul(const Elt& a, const Elt& b) const;
  Elt pow(Elt base, BigInt exp) const;

  /// Euler-criterion square test: is a a square in F_q? (0 counts as a square.)
  bool is_square(const Elt& a) const;

 private:
  std::uint64_t p_;
  int d_;
  std::uint64_t q_;
  std::vector<std::uint32_t> minpoly_;
  // Representations of x^d .. x^{2d-2} reduced mod the minpoly, used to fold
  // the upper half of a schoolbook product.
  std::array<Elt, 2> xpow_;
};

}  // namespace galmax::fq
