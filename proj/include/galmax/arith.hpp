#pragma once

/// Number-theoretic algorithms on top of the polynomial layer: primality
/// testing, univariate factorization over prime fields, Hensel lifting to
/// prime-power precision, and multiplicative-order utilities.

#include <cstdint>
#include <vector>

#include "galmax/bigint.hpp"
#include "galmax/poly.hpp"

namespace galmax::arith {

enum class Primality { composite, prime, probable_prime };

/// Deterministic Miller–Rabin below 3.317e24 (fixed 13-base certificate);
/// Baillie–PSW above, reported as `probable_prime`. No known BPSW
/// counterexample exists; callers surface the distinction in reports.
Primality is_prime(const BigInt& n);

/// Convenience for machine-sized candidates (always deterministic).
bool is_prime_u64(std::uint64_t n);

struct FactorPower {
  PolyZ factor; // monic, irreducible over F_p
  int multiplicity;
};

/// Complete factorization of f over F_p (p prime): squarefree decomposition
/// (including the characteristic-p descent f = g(x^p)), distinct-degree
/// splitting, then seeded Cantor–Zassenhaus equal-degree splitting (the
/// p = 2 case uses the trace map). Output is sorted (degree, then
/// lexicographic by coefficients) so runs are reproducible regardless of
/// the split order; multiplicities satisfy
///   f ≡ lc(f) · ∏ factor^multiplicity  (mod p).
std::vector<FactorPower> factor_mod_p(const PolyZ& f, const BigInt& p,
                                      std::uint64_t seed);

/// Degrees of the irreducible factors of a *squarefree* f mod p, computed by
/// distinct-degree splitting alone — no randomness, no equal-degree stage.
/// Serves as an independent cross-check of factor_mod_p's cycle types.
/// Throws std::domain_error if f is not squarefree mod p.
std::vector<int> factor_degrees_squarefree(const PolyZ& f, const BigInt& p);

/// Lifts a monic pairwise-coprime factorization f ≡ ∏ factors (mod p) to
/// precision p^k (quadratic Hensel steps arranged in a factor tree).
/// Pre: f monic, every factor monic, the factors pairwise coprime mod p and
/// their product ≡ f mod p. Post: returned factors are monic mod p^k,
/// reduce to the inputs mod p, and multiply to f mod p^k.
std::vector<PolyZ> hensel_lift(const PolyZ& f, const std::vector<PolyZ>& factors,
                               const BigInt& p, unsigned long k);

/// Order of a in (Z/m)^*. Requires gcd(a, m) = 1 and m to fit in 64 bits
/// (the group order is factored by trial division).
std::uint64_t multiplicative_order(const BigInt& a, std::uint64_t m);

/// True iff a generates (Z/q)^*, q prime.
bool is_primitive_root(const BigInt& a, std::uint64_t q);

/// Deterministic-for-a-seed search for a monic irreducible of degree d over
/// F_p (Rabin's irreducibility test). Used to construct F_{p^d}.
PolyZ find_irreducible(std::uint64_t p, int d, std::uint64_t seed);

} // namespace galmax::arith
