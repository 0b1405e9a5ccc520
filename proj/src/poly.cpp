#include "galmax/poly.hpp"

#include <stdexcept>

namespace galmax {

PolyZ& normalize(PolyZ& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
  return f;
}

bool is_monic(const PolyZ& f) { return !f.empty() && f.back() == 1; }

PolyZ poly_add(const PolyZ& a, const PolyZ& b) {
  PolyZ r(std::max(a.size(), b.size()), BigInt(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return normalize(r);
}

PolyZ poly_sub(const PolyZ& a, const PolyZ& b) {
  PolyZ r(std::max(a.size(), b.size()), BigInt(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  return normalize(r);
}

PolyZ poly_mul(const PolyZ& a, const PolyZ& b) {
  if (a.empty() || b.empty()) return {};
  PolyZ r(a.size() + b.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return normalize(r);
}

PolyZ poly_scale(const PolyZ& a, const BigInt& c) {
  PolyZ r = a;
  for (auto& x : r) x *= c;
  return normalize(r);
}

PolyZ derivative(const PolyZ& f) {
  if (f.size() <= 1) return {};
  PolyZ r(f.size() - 1);
  for (std::size_t i = 1; i < f.size(); ++i) r[i - 1] = f[i] * BigInt(i);
  return normalize(r);
}

BigInt poly_eval(const PolyZ& f, const BigInt& x) {
  BigInt v = 0;
  for (auto it = f.rbegin(); it != f.rend(); ++it) v = v * x + *it;
  return v;
}

PolyZ taylor_shift(const PolyZ& f, const BigInt& c) {
  // Horner in (x + c): repeatedly multiply the accumulator by (x + c) and
  // add the next coefficient. O(n^2) exact big-integer operations.
  PolyZ r;
  for (auto it = f.rbegin(); it != f.rend(); ++it) {
    PolyZ next(r.size() + 1, BigInt(0));
    for (std::size_t i = 0; i < r.size(); ++i) {
      next[i + 1] += r[i];
      next[i] += r[i] * c;
    }
    if (next.empty()) next.assign(1, BigInt(0));
    next[0] += *it;
    r = std::move(next);
    normalize(r);
  }
  return r;
}

namespace {

/// Bareiss fraction-free determinant; mutates its argument. Exact over Z.
BigInt bareiss_det(std::vector<std::vector<BigInt>>& a) {
  const std::size_t n = a.size();
  if (n == 0) return BigInt(1);
  BigInt denom(1);
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t piv = k + 1;
      while (piv < n && a[piv][k] == 0) ++piv;
      if (piv == n) return BigInt(0);
      std::swap(a[k], a[piv]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        BigInt num = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        // Exact division per the Bareiss invariant.
        mpz_divexact(a[i][j].get_mpz_t(), num.get_mpz_t(),
                     denom.get_mpz_t());
      }
      a[i][k] = 0;
    }
    denom = a[k][k];
  }
  return sign > 0 ? a[n - 1][n - 1] : -a[n - 1][n - 1];
}

} // namespace

BigInt resultant(const PolyZ& f, const PolyZ& g) {
  const int df = degree(f), dg = degree(g);
  if (df < 0 || dg < 0) return BigInt(0);
  if (df == 0) return pow_ui(f[0], static_cast<unsigned long>(dg));
  if (dg == 0) return pow_ui(g[0], static_cast<unsigned long>(df));
  const std::size_t n = static_cast<std::size_t>(df + dg);
  std::vector<std::vector<BigInt>> syl(n, std::vector<BigInt>(n, BigInt(0)));
  // dg rows of f's coefficients, then df rows of g's, descending order.
  for (int r = 0; r < dg; ++r) {
    for (int i = 0; i <= df; ++i) syl[r][r + i] = f[df - i];
  }
  for (int r = 0; r < df; ++r) {
    for (int i = 0; i <= dg; ++i) syl[dg + r][r + i] = g[dg - i];
  }
  return bareiss_det(syl);
}

BigInt poly_discriminant(const PolyZ& f) {
  const int n = degree(f);
  if (n < 1) throw std::domain_error("poly_discriminant: degree must be >= 1");
  BigInt res = resultant(f, derivative(f));
  BigInt d;
  mpz_divexact(d.get_mpz_t(), res.get_mpz_t(), lc(f).get_mpz_t());
  return (static_cast<long>(n) * (n - 1) / 2) % 2 == 0 ? d : -d;
}

PolyZ mod_reduce(const PolyZ& f, const BigInt& m) {
  PolyZ r(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) r[i] = mod_floor(f[i], m);
  return normalize(r);
}

PolyZ mod_add(const PolyZ& a, const PolyZ& b, const BigInt& m) {
  return mod_reduce(poly_add(a, b), m);
}

PolyZ mod_sub(const PolyZ& a, const PolyZ& b, const BigInt& m) {
  return mod_reduce(poly_sub(a, b), m);
}

PolyZ mod_mul(const PolyZ& a, const PolyZ& b, const BigInt& m) {
  if (a.empty() || b.empty()) return {};
  PolyZ r(a.size() + b.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return mod_reduce(r, m);
}

PolyZ mod_scale(const PolyZ& a, const BigInt& c, const BigInt& m) {
  PolyZ r = a;
  for (auto& x : r) x = mod_floor(x * c, m);
  return normalize(r);
}

std::pair<PolyZ, PolyZ> mod_divrem(const PolyZ& a, const PolyZ& b,
                                   const BigInt& m) {
  PolyZ rem = mod_reduce(a, m);
  PolyZ den = mod_reduce(b, m);
  if (den.empty()) throw std::domain_error("mod_divrem: division by zero");
  const BigInt inv = invmod(lc(den), m); // throws if lc not a unit
  const int db = degree(den);
  if (degree(rem) < db) return {{}, rem};
  PolyZ quot(rem.size() - den.size() + 1, BigInt(0));
  while (degree(rem) >= db) {
    const int k = degree(rem) - db;
    const BigInt c = mod_floor(lc(rem) * inv, m);
    quot[k] = c;
    // rem -= c * x^k * den
    for (int i = 0; i <= db; ++i) {
      rem[k + i] = mod_floor(rem[k + i] - c * den[i], m);
    }
    normalize(rem);
  }
  return {normalize(quot), rem};
}

PolyZ mod_monic(const PolyZ& f, const BigInt& m) {
  PolyZ r = mod_reduce(f, m);
  if (r.empty()) return r;
  return mod_scale(r, invmod(lc(r), m), m);
}

PolyZ mod_gcd(PolyZ a, PolyZ b, const BigInt& p) {
  a = mod_reduce(a, p);
  b = mod_reduce(b, p);
  while (!b.empty()) {
    PolyZ r = mod_divrem(a, b, p).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.empty() ? a : mod_monic(a, p);
}

PolyZ mod_powmod(const PolyZ& base, const BigInt& e, const PolyZ& f,
                 const BigInt& m) {
  if (!is_monic(f)) throw std::domain_error("mod_powmod: modulus polynomial must be monic");
  if (e < 0) throw std::domain_error("mod_powmod: negative exponent");
  PolyZ result{BigInt(1)};
  PolyZ b = mod_divrem(base, f, m).second;
  const std::size_t nbits = mpz_sizeinbase(e.get_mpz_t(), 2);
  if (e == 0) return result;
  for (std::size_t i = nbits; i-- > 0;) {
    result = mod_divrem(mod_mul(result, result, m), f, m).second;
    if (mpz_tstbit(e.get_mpz_t(), i)) {
      result = mod_divrem(mod_mul(result, b, m), f, m).second;
    }
  }
  return result;
}

PolyZ mod_taylor_shift(const PolyZ& f, const BigInt& c, const BigInt& m) {
  return mod_reduce(taylor_shift(mod_reduce(f, m), mod_floor(c, m)), m);
}

BigInt mod_eval(const PolyZ& f, const BigInt& x, const BigInt& m) {
  BigInt v = 0;
  for (auto it = f.rbegin(); it != f.rend(); ++it) {
    v = mod_floor(v * x + *it, m);
  }
  return v;
}

} // namespace galmax
