#pragma once

/// Dense univariate polynomials over Z and over Z/m.
///
/// Representation: `PolyZ` is a coefficient vector in ascending order
/// (index i holds the coefficient of x^i), with no trailing zero
/// coefficients; the zero polynomial is the empty vector. Modular
/// polynomials reuse the same representation with every coefficient kept
/// canonical in [0, m); the modulus is passed explicitly, which keeps one
/// vocabulary type across the p-adic precision ladders used elsewhere.

#include <utility>
#include <vector>

#include "galmax/bigint.hpp"

namespace galmax {

using PolyZ = std::vector<BigInt>;

/// Degree, with deg 0 = -1 by convention.
inline int degree(const PolyZ& f) { return static_cast<int>(f.size()) - 1; }

/// Drops trailing zeros in place and returns the argument.
PolyZ& normalize(PolyZ& f);

inline bool is_zero(const PolyZ& f) { return f.empty(); }
inline BigInt lc(const PolyZ& f) { return f.empty() ? BigInt(0) : f.back(); }
bool is_monic(const PolyZ& f);

PolyZ poly_add(const PolyZ& a, const PolyZ& b);
PolyZ poly_sub(const PolyZ& a, const PolyZ& b);
PolyZ poly_mul(const PolyZ& a, const PolyZ& b);
PolyZ poly_scale(const PolyZ& a, const BigInt& c);
PolyZ derivative(const PolyZ& f);
BigInt poly_eval(const PolyZ& f, const BigInt& x);

/// f(x + c), computed by Horner expansion; exact over Z.
PolyZ taylor_shift(const PolyZ& f, const BigInt& c);

/// Resultant of f and g via fraction-free (Bareiss) elimination of the
/// Sylvester matrix. Exact; intended for the small degrees used here.
BigInt resultant(const PolyZ& f, const PolyZ& g);

/// disc f = (-1)^{n(n-1)/2} res(f, f') / lc(f), n = deg f.
/// Requires deg f >= 1. The sign convention matters: callers compare the
/// absolute value against claimed factorizations and report the sign.
BigInt poly_discriminant(const PolyZ& f);

// --- arithmetic modulo m (m >= 2); inputs need not be reduced -------------

PolyZ mod_reduce(const PolyZ& f, const BigInt& m);
PolyZ mod_add(const PolyZ& a, const PolyZ& b, const BigInt& m);
PolyZ mod_sub(const PolyZ& a, const PolyZ& b, const BigInt& m);
PolyZ mod_mul(const PolyZ& a, const PolyZ& b, const BigInt& m);
PolyZ mod_scale(const PolyZ& a, const BigInt& c, const BigInt& m);

/// Quotient and remainder of a by b where lc(b) is invertible mod m
/// (throws std::domain_error otherwise). Works over any Z/m.
std::pair<PolyZ, PolyZ> mod_divrem(const PolyZ& a, const PolyZ& b,
                                   const BigInt& m);

/// Scales f so its leading coefficient becomes 1; lc(f) must be invertible.
PolyZ mod_monic(const PolyZ& f, const BigInt& m);

/// Monic gcd over the *field* Z/p (p prime). Euclid; gcd(0,0) = 0.
PolyZ mod_gcd(PolyZ a, PolyZ b, const BigInt& p);

/// base^e modulo (f, m): square-and-multiply in (Z/m)[x]/(f).
/// f must be monic. e >= 0.
PolyZ mod_powmod(const PolyZ& base, const BigInt& e, const PolyZ& f,
                 const BigInt& m);

/// f(x + c) with coefficients reduced mod m.
PolyZ mod_taylor_shift(const PolyZ& f, const BigInt& c, const BigInt& m);

BigInt mod_eval(const PolyZ& f, const BigInt& x, const BigInt& m);

} // namespace galmax
