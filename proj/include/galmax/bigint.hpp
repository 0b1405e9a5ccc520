#pragma once

/// Arbitrary-precision integers.
///
/// GMP's `mpz_class` supplies storage and ring operations; the helpers here
/// pin down the conventions the rest of the library relies on:
///   * canonical residues are always in [0, m),
///   * external I/O is decimal strings only (no 64-bit truncation anywhere),
///   * exponents that count bits or digits fit in `unsigned long`.

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace galmax {

using BigInt = mpz_class;

/// Parses a base-10 integer (optional leading '-'). Throws
/// std::invalid_argument on anything else, including empty strings.
inline BigInt parse_bigint(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("parse_bigint: empty string");
  std::size_t start = (s[0] == '-') ? 1 : 0;
  if (start == s.size()) throw std::invalid_argument("parse_bigint: sign only");
  for (std::size_t i = start; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') {
      throw std::invalid_argument("parse_bigint: not a decimal integer: " + s);
    }
  }
  return BigInt(s, 10);
}

inline std::string to_decimal(const BigInt& n) { return n.get_str(10); }

/// Canonical residue of a mod m, in [0, m). Requires m > 0.
inline BigInt mod_floor(const BigInt& a, const BigInt& m) {
  BigInt r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

/// b^e for a machine-sized exponent.
inline BigInt pow_ui(const BigInt& b, unsigned long e) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}

/// b^e mod m, m > 0, e >= 0.
inline BigInt powmod(const BigInt& b, const BigInt& e, const BigInt& m) {
  BigInt r;
  mpz_powm(r.get_mpz_t(), b.get_mpz_t(), e.get_mpz_t(), m.get_mpz_t());
  return r;
}

/// Multiplicative inverse of a mod m. Throws std::domain_error when
/// gcd(a, m) != 1.
inline BigInt invmod(const BigInt& a, const BigInt& m) {
  BigInt r;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0) {
    throw std::domain_error("invmod: " + to_decimal(a) +
                            " is not invertible modulo " + to_decimal(m));
  }
  return r;
}

inline BigInt gcd(const BigInt& a, const BigInt& b) {
  BigInt r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

/// Largest e with p^e | n (n != 0). Requires p >= 2.
inline unsigned long valuation(const BigInt& n, const BigInt& p) {
  if (n == 0) throw std::domain_error("valuation: v_p(0) is infinite");
  BigInt rest;
  return mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
}

inline bool fits_u64(const BigInt& n) {
  return n >= 0 && mpz_sizeinbase(n.get_mpz_t(), 2) <= 64;
}

inline std::uint64_t to_u64(const BigInt& n) {
  if (!fits_u64(n)) throw std::overflow_error("to_u64: " + to_decimal(n));
  std::uint64_t lo = mpz_get_ui(n.get_mpz_t());
  if (mpz_sizeinbase(n.get_mpz_t(), 2) > 8 * sizeof(unsigned long)) {
    // 32-bit ulong platforms: assemble from limbs. Not hit on this target,
    // kept for portability.
    BigInt hi = n >> 32;
    lo = (static_cast<std::uint64_t>(mpz_get_ui(hi.get_mpz_t())) << 32) |
         (mpz_get_ui(n.get_mpz_t()) & 0xffffffffULL);
  }
  return lo;
}

} // namespace galmax
