#include "galmax/arith.hpp"

#include <algorithm>
#include <stdexcept>

#include "galmax/rng.hpp"

namespace galmax::arith {
namespace {

/// One strong-pseudoprime round: n-1 = d·2^s with d odd.
bool miller_rabin_round(const BigInt& n, const BigInt& d, unsigned long s,
                        const BigInt& base) {
  BigInt x = powmod(base, d, n);
  if (x == 1 || x == n - 1) return true;
  for (unsigned long i = 1; i < s; ++i) {
    x = mod_floor(x * x, n);
    if (x == n - 1) return true;
  }
  return false;
}

/// Strong Lucas probable-prime test with Selfridge's parameter choice
/// (method A): first D in 5, -7, 9, -11, ... with (D|n) = -1; P = 1,
/// Q = (1-D)/4. Assumes n odd, n > 1, not a perfect square.
bool strong_lucas(const BigInt& n) {
  BigInt d_param = 5;
  while (true) {
    const int j = mpz_jacobi(d_param.get_mpz_t(), n.get_mpz_t());
    if (j == 0 && abs(d_param) != n) return false; // shares a factor with n
    if (j == -1) break;
    d_param = d_param > 0 ? BigInt(-(d_param + 2)) : BigInt(-(d_param - 2));
  }
  const BigInt q_param = (1 - d_param) / 4;

  BigInt delta = n + 1;
  const unsigned long s = mpz_scan1(delta.get_mpz_t(), 0);
  const BigInt d_odd = delta >> s;

  // Binary ladder for U_k, V_k, Q^k.
  BigInt u(1), v(1), qk = mod_floor(q_param, n);
  const std::size_t bits = mpz_sizeinbase(d_odd.get_mpz_t(), 2);
  const BigInt inv2 = invmod(BigInt(2), n);
  for (std::size_t i = bits - 1; i-- > 0;) {
    // (U, V) <- (U*V, (V^2 + D*U^2)/2), Q^k squares.
    BigInt u2 = mod_floor(u * v, n);
    BigInt v2 = mod_floor((v * v + d_param * u * u) * inv2, n);
    qk = mod_floor(qk * qk, n);
    u = u2;
    v = v2;
    if (mpz_tstbit(d_odd.get_mpz_t(), i)) {
      // (U, V) <- ((U + V)/2, (V + D*U)/2), Q^k *= Q.
      BigInt u3 = mod_floor((u + v) * inv2, n);
      BigInt v3 = mod_floor((v + d_param * u) * inv2, n);
      qk = mod_floor(qk * q_param, n);
      u = u3;
      v = v3;
    }
  }
  if (u == 0 || v == 0) return true;
  for (unsigned long r = 1; r < s; ++r) {
    v = mod_floor(v * v - 2 * qk, n);
    if (v == 0) return true;
    qk = mod_floor(qk * qk, n);
  }
  return false;
}

} // namespace

Primality is_prime(const BigInt& n) {
  if (n < 2) return Primality::composite;
  static const unsigned long small_primes[] = {2,  3,  5,  7,  11, 13, 17,
                                               19, 23, 29, 31, 37, 41};
  for (unsigned long p : small_primes) {
    if (n == p) return Primality::prime;
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return Primality::composite;
  }
  BigInt n1 = n - 1;
  const unsigned long s = mpz_scan1(n1.get_mpz_t(), 0);
  const BigInt d = n1 >> s;

  // The first 13 prime bases decide primality for all n below
  // 3,317,044,064,679,887,385,961,981.
  static const BigInt mr_bound("3317044064679887385961981");
  if (n < mr_bound) {
    for (unsigned long b : small_primes) {
      if (!miller_rabin_round(n, d, s, BigInt(b))) return Primality::composite;
    }
    return Primality::prime;
  }

  // Baillie–PSW: strong base-2 test plus strong Lucas test.
  if (!miller_rabin_round(n, d, s, BigInt(2))) return Primality::composite;
  if (mpz_perfect_square_p(n.get_mpz_t())) return Primality::composite;
  if (!strong_lucas(n)) return Primality::composite;
  return Primality::probable_prime;
}

bool is_prime_u64(std::uint64_t n) {
  return is_prime(BigInt(static_cast<unsigned long>(n))) == Primality::prime;
}

namespace {

/// Replaces f(x) = g(x^p) by g(x); valid over F_p where a^p = a.
PolyZ frobenius_descent(const PolyZ& f, const BigInt& p) {
  const unsigned long pl = to_u64(p);
  PolyZ g(f.size() / pl + 1, BigInt(0));
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i] != 0) {
      if (i % pl != 0) {
        throw std::logic_error("frobenius_descent: derivative was not zero");
      }
      g[i / pl] = f[i];
    }
  }
  PolyZ gg = g;
  return normalize(gg);
}

/// Distinct-degree splitting of a squarefree monic g: returns (product of
/// irreducible factors of degree d, d) pairs in increasing d.
std::vector<std::pair<PolyZ, int>> distinct_degree_split(PolyZ g,
                                                         const BigInt& p) {
  std::vector<std::pair<PolyZ, int>> out;
  PolyZ h{BigInt(0), BigInt(1)}; // x
  int d = 0;
  while (degree(g) >= 1) {
    ++d;
    if (2 * d > degree(g)) {
      out.emplace_back(g, degree(g)); // remainder is irreducible
      break;
    }
    h = mod_powmod(h, p, g, p); // h = x^{p^d} mod g
    PolyZ diff = mod_sub(h, PolyZ{BigInt(0), BigInt(1)}, p);
    PolyZ factor = mod_gcd(diff, g, p);
    if (degree(factor) > 0) {
      out.emplace_back(factor, d);
      g = mod_divrem(g, factor, p).first;
      h = mod_divrem(h, g, p).second;
    }
  }
  return out;
}

/// Equal-degree splitting (Cantor–Zassenhaus) of a squarefree monic g whose
/// irreducible factors all have degree d.
void equal_degree_split(const PolyZ& g, int d, const BigInt& p, Rng& rng,
                        std::vector<PolyZ>& out) {
  if (degree(g) == d) {
    out.push_back(mod_monic(g, p));
    return;
  }
  const unsigned long pl = to_u64(p);
  PolyZ splitter;
  while (true) {
    // Random nonconstant a of degree < deg g.
    PolyZ a(static_cast<std::size_t>(degree(g)), BigInt(0));
    for (auto& cc : a) cc = BigInt(static_cast<unsigned long>(rng.below(pl)));
    PolyZ an = a;
    normalize(an);
    if (degree(an) < 1) continue;

    PolyZ b;
    if (p == 2) {
      // Trace map: a + a^2 + a^4 + ... + a^{2^{d-1}} mod g.
      PolyZ t = an, cur = an;
      for (int i = 1; i < d; ++i) {
        cur = mod_divrem(mod_mul(cur, cur, p), g, p).second;
        t = mod_add(t, cur, p);
      }
      b = t;
    } else {
      // a^{(p^d - 1)/2} - 1 mod g.
      const BigInt e = (pow_ui(p, static_cast<unsigned long>(d)) - 1) / 2;
      b = mod_sub(mod_powmod(an, e, g, p), PolyZ{BigInt(1)}, p);
    }
    PolyZ candidate = mod_gcd(b, g, p);
    if (degree(candidate) > 0 && degree(candidate) < degree(g)) {
      splitter = candidate;
      break;
    }
  }
  equal_degree_split(splitter, d, p, rng, out);
  equal_degree_split(mod_divrem(g, splitter, p).first, d, p, rng, out);
}

bool poly_less(const PolyZ& a, const PolyZ& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

} // namespace

std::vector<FactorPower> factor_mod_p(const PolyZ& f, const BigInt& p,
                                      std::uint64_t seed) {
  if (is_prime(p) == Primality::composite) {
    throw std::domain_error("factor_mod_p: modulus must be prime");
  }
  PolyZ g = mod_reduce(f, p);
  if (degree(g) < 1) {
    throw std::domain_error("factor_mod_p: polynomial is constant mod p");
  }
  g = mod_monic(g, p);
  Rng rng(seed ^ 0x5eedf00dULL);

  // Squarefree decomposition, with characteristic-p descent: whenever the
  // gcd step leaves a part with zero derivative, it is h(x^p) = h(x)^p.
  std::vector<std::pair<PolyZ, int>> squarefree_parts;
  struct Item { PolyZ poly; int mult; };
  std::vector<Item> stack{{g, 1}};
  while (!stack.empty()) {
    Item it = stack.back();
    stack.pop_back();
    PolyZ fp = mod_reduce(derivative(it.poly), p);
    if (is_zero(fp)) {
      stack.push_back({frobenius_descent(it.poly, p),
                       it.mult * static_cast<int>(to_u64(p))});
      continue;
    }
    PolyZ c = mod_gcd(it.poly, fp, p);
    PolyZ w = mod_divrem(it.poly, c, p).first;
    int i = 1;
    while (degree(w) > 0) {
      PolyZ y = mod_gcd(w, c, p);
      PolyZ z = mod_divrem(w, y, p).first;
      if (degree(z) > 0) squarefree_parts.emplace_back(z, i * it.mult);
      c = mod_divrem(c, y, p).first;
      w = std::move(y);
      ++i;
    }
    if (degree(c) > 0) stack.push_back({c, it.mult}); // derivative 0 next pass
  }

  std::vector<FactorPower> result;
  for (auto& [part, mult] : squarefree_parts) {
    for (auto& [block, d] : distinct_degree_split(part, p)) {
      std::vector<PolyZ> irreducibles;
      equal_degree_split(block, d, p, rng, irreducibles);
      for (auto& irr : irreducibles) result.push_back({irr, mult});
    }
  }
  std::sort(result.begin(), result.end(), [](const FactorPower& a,
                                             const FactorPower& b) {
    if (a.factor.size() != b.factor.size()) return poly_less(a.factor, b.factor);
    if (a.multiplicity != b.multiplicity) return a.multiplicity < b.multiplicity;
    return poly_less(a.factor, b.factor);
  });
  return result;
}

std::vector<int> factor_degrees_squarefree(const PolyZ& f, const BigInt& p) {
  PolyZ g = mod_monic(mod_reduce(f, p), p);
  if (degree(g) < 1) {
    throw std::domain_error("factor_degrees_squarefree: constant polynomial");
  }
  PolyZ der = mod_reduce(derivative(f), p);
  if (degree(mod_gcd(g, der, p)) != 0) {
    throw std::domain_error("factor_degrees_squarefree: not squarefree mod p");
  }
  std::vector<int> degrees;
  for (auto& [block, d] : distinct_degree_split(g, p)) {
    const int count = degree(block) / d;
    for (int i = 0; i < count; ++i) degrees.push_back(d);
  }
  std::sort(degrees.begin(), degrees.end());
  return degrees;
}

namespace {

struct BezoutPair {
  PolyZ s, t; // s*g + t*h = 1 mod p
};

/// Extended Euclid over F_p for coprime g, h.
BezoutPair poly_bezout(const PolyZ& g, const PolyZ& h, const BigInt& p) {
  PolyZ r0 = mod_reduce(g, p), r1 = mod_reduce(h, p);
  PolyZ s0{BigInt(1)}, s1{}, t0{}, t1{BigInt(1)};
  while (!is_zero(r1)) {
    auto [q, r] = mod_divrem(r0, r1, p);
    PolyZ s2 = mod_sub(s0, mod_mul(q, s1, p), p);
    PolyZ t2 = mod_sub(t0, mod_mul(q, t1, p), p);
    r0 = std::move(r1); r1 = std::move(r);
    s0 = std::move(s1); s1 = std::move(s2);
    t0 = std::move(t1); t1 = std::move(t2);
  }
  if (degree(r0) != 0) {
    throw std::domain_error("poly_bezout: inputs are not coprime mod p");
  }
  const BigInt inv = invmod(r0[0], p);
  return {mod_scale(s0, inv, p), mod_scale(t0, inv, p)};
}

/// One quadratic Hensel step ladder: lifts f ≡ g·h (mod p) to mod p^k.
/// f, g, h monic; g, h coprime mod p. Returns the lifted (g, h).
std::pair<PolyZ, PolyZ> hensel_pair(const PolyZ& f, PolyZ g, PolyZ h,
                                    const BigInt& p, unsigned long k) {
  auto [s, t] = poly_bezout(g, h, p);
  BigInt m = p;
  unsigned long prec = 1;
  while (prec < k) {
    prec = std::min(2 * prec, k);
    const BigInt m2 = pow_ui(p, prec);
    // Newton step for the factorization: e measures the defect.
    PolyZ e = mod_sub(f, mod_mul(g, h, m2), m2);
    auto [q, r] = mod_divrem(mod_mul(s, e, m2), h, m2);
    PolyZ g_new = mod_add(g, mod_add(mod_mul(t, e, m2), mod_mul(q, g, m2), m2), m2);
    PolyZ h_new = mod_add(h, r, m2);
    // Newton step for the Bezout pair: b measures its defect.
    PolyZ b = mod_sub(mod_add(mod_mul(s, g_new, m2), mod_mul(t, h_new, m2), m2),
                      PolyZ{BigInt(1)}, m2);
    auto [c, d] = mod_divrem(mod_mul(s, b, m2), h_new, m2);
    s = mod_sub(s, d, m2);
    t = mod_sub(mod_sub(t, mod_mul(t, b, m2), m2), mod_mul(c, g_new, m2), m2);
    g = std::move(g_new);
    h = std::move(h_new);
    m = m2;
  }
  (void)m;
  return {g, h};
}

void hensel_tree(const PolyZ& f, const std::vector<PolyZ>& factors,
                 std::size_t lo, std::size_t hi, const BigInt& p,
                 unsigned long k, std::vector<PolyZ>& out) {
  if (hi - lo == 1) {
    out.push_back(mod_reduce(f, pow_ui(p, k)));
    return;
  }
  const std::size_t mid = lo + (hi - lo) / 2;
  PolyZ g0{BigInt(1)}, h0{BigInt(1)};
  for (std::size_t i = lo; i < mid; ++i) g0 = mod_mul(g0, factors[i], p);
  for (std::size_t i = mid; i < hi; ++i) h0 = mod_mul(h0, factors[i], p);
  auto [g, h] = hensel_pair(mod_reduce(f, pow_ui(p, k)), g0, h0, p, k);
  hensel_tree(g, factors, lo, mid, p, k, out);
  hensel_tree(h, factors, mid, hi, p, k, out);
}

} // namespace

std::vector<PolyZ> hensel_lift(const PolyZ& f, const std::vector<PolyZ>& factors,
                               const BigInt& p, unsigned long k) {
  if (!is_monic(f)) throw std::domain_error("hensel_lift: f must be monic");
  if (factors.empty()) throw std::domain_error("hensel_lift: no factors");
  PolyZ prod{BigInt(1)};
  for (const auto& fac : factors) {
    if (!is_monic(fac)) throw std::domain_error("hensel_lift: factors must be monic");
    prod = mod_mul(prod, fac, p);
  }
  if (prod != mod_reduce(f, p)) {
    throw std::domain_error("hensel_lift: product of factors != f mod p");
  }
  for (std::size_t i = 0; i < factors.size(); ++i) {
    for (std::size_t j = i + 1; j < factors.size(); ++j) {
      if (degree(mod_gcd(factors[i], factors[j], p)) != 0) {
        throw std::domain_error("hensel_lift: factors are not pairwise coprime");
      }
    }
  }
  std::vector<PolyZ> out;
  hensel_tree(f, factors, 0, factors.size(), p, k, out);
  return out;
}

std::uint64_t multiplicative_order(const BigInt& a, std::uint64_t m) {
  const BigInt mm(static_cast<unsigned long>(m));
  if (gcd(mod_floor(a, mm), mm) != 1) {
    throw std::domain_error("multiplicative_order: element is not a unit");
  }
  // Euler phi by trial-division factorization of m.
  std::uint64_t phi = 1, rest = m;
  std::vector<std::uint64_t> phi_primes;
  for (std::uint64_t q = 2; q * q <= rest; ++q) {
    if (rest % q == 0) {
      std::uint64_t qe = 1;
      while (rest % q == 0) { rest /= q; qe *= q; }
      phi *= qe / q * (q - 1);
    }
  }
  if (rest > 1) phi *= rest - 1;

  std::uint64_t order = phi, n = phi;
  for (std::uint64_t q = 2; q * q <= n; ++q) {
    while (n % q == 0) {
      n /= q;
      while (order % q == 0 &&
             powmod(a, BigInt(static_cast<unsigned long>(order / q)), mm) == 1) {
        order /= q;
      }
    }
  }
  if (n > 1) {
    while (order % n == 0 &&
           powmod(a, BigInt(static_cast<unsigned long>(order / n)), mm) == 1) {
      order /= n;
    }
  }
  return order;
}

bool is_primitive_root(const BigInt& a, std::uint64_t q) {
  if (!is_prime_u64(q)) {
    throw std::domain_error("is_primitive_root: modulus must be prime");
  }
  if (mod_floor(a, BigInt(static_cast<unsigned long>(q))) == 0) return false;
  return multiplicative_order(a, q) == q - 1;
}

PolyZ find_irreducible(std::uint64_t p, int d, std::uint64_t seed) {
  if (d < 1) throw std::domain_error("find_irreducible: degree must be >= 1");
  const BigInt pb(static_cast<unsigned long>(p));
  if (d == 1) return PolyZ{BigInt(0), BigInt(1)}; // x itself
  Rng rng(seed ^ 0x1bd11bdaa9fc1a22ULL);
  const PolyZ x{BigInt(0), BigInt(1)};
  while (true) {
    PolyZ f(static_cast<std::size_t>(d) + 1, BigInt(0));
    f[d] = 1;
    for (int i = 0; i < d; ++i) {
      f[i] = BigInt(static_cast<unsigned long>(rng.below(p)));
    }
    // Rabin: x^{p^d} = x mod f, and x^{p^{d/r}} - x coprime to f for all
    // prime r | d.
    PolyZ xp = mod_powmod(x, pow_ui(pb, static_cast<unsigned long>(d)), f, pb);
    if (xp != mod_divrem(x, f, pb).second) continue;
    bool ok = true;
    for (int r = 2; r <= d; ++r) {
      if (d % r != 0 || !is_prime_u64(static_cast<std::uint64_t>(r))) continue;
      PolyZ sub = mod_powmod(x, pow_ui(pb, static_cast<unsigned long>(d / r)), f, pb);
      if (degree(mod_gcd(mod_sub(sub, x, pb), f, pb)) != 0) {
        ok = false;
        break;
      }
    }
    if (ok) return f;
  }
}

} // namespace galmax::arith
