#include "galmax/symplectic.hpp"

#include <numeric>
#include <stdexcept>
#include <utility>

#include "galmax/arith.hpp"

namespace galmax::symplectic {



namespace {

/// Inverse of a unit mod m (extended Euclid), m not necessarily prime.
std::uint32_t unit_inverse(std::uint32_t a, std::uint32_t m) {
  std::int64_t t = 0, new_t = 1, r = m, new_r = a % m;
  while (new_r != 0) {
    const std::int64_t q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  if (r != 1) throw std::domain_error("not a unit");
  return static_cast<std::uint32_t>(t < 0 ? t + m : t);
}

void require_g(int g) {
  if (g < 1 || g > 32) throw std::invalid_argument("genus-rank out of range");
}

}  // namespace

SympForm SympForm::block(int g, std::uint32_t m) {
  require_g(g);
  MatMod gram(2 * g, m);
  for (int i = 0; i < g; ++i) {
    gram.set(i, g + i, 1);
    gram.set(g + i, i, -1);
  }
  return SympForm{g, m, FormKind::block, gram};
}

SympForm SympForm::adjacent_pairs(int g, std::uint32_t m) {
  require_g(g);
  MatMod gram(2 * g, m);
  for (int i = 0; i < g; ++i) {
    gram.set(2 * i, 2 * i + 1, 1);
    gram.set(2 * i + 1, 2 * i, -1);
  }
  return SympForm{g, m, FormKind::adjacent_pairs, gram};
}

MatMod block_to_adjacent_change(int g, std::uint32_t m) {
  require_g(g);
  MatMod p(2 * g, m);
  for (int i = 0; i < g; ++i) {
    p.set(i, 2 * i, 1);          // a_i (block row i) is adjacent basis vector 2i
    p.set(g + i, 2 * i + 1, 1);  // b_i (block row g+i) is adjacent basis vector 2i+1
  }
  return p;
}

std::optional<std::uint32_t> multiplier(const MatMod& S, const SympForm& form) {
  if (S.dim() != form.gram.dim() || S.modulus() != form.m) throw std::invalid_argument("size/modulus mismatch");
  const MatMod a = S.transpose() * form.gram * S;
  // Find the scalar at a position where the Gram matrix is a unit (+-1 for
  // the standard forms), then verify globally.
  const std::uint32_t m = form.m;
  std::optional<std::uint32_t> c;
  for (std::size_t i = 0; i < form.gram.dim() && !c; ++i)
    for (std::size_t j = 0; j < form.gram.dim() && !c; ++j) {
      const std::uint32_t w = form.gram.at(i, j);
      if (w != 0 && std::gcd(w, m) == 1) c = static_cast<std::uint32_t>(std::uint64_t(a.at(i, j)) * unit_inverse(w, m) % m);
    }
  if (!c) throw std::invalid_argument("degenerate form");
  if (std::gcd(*c, m) != 1) return std::nullopt;  // multiplier must be a unit
  if (!(a == form.gram.scaled(*c))) return std::nullopt;
  return c;
}

LieClass lie_membership(const MatMod& L, const SympForm& form) {
  if (L.dim() != form.gram.dim() || L.modulus() != form.m) throw std::invalid_argument("size/modulus mismatch");
  const MatMod e = L.transpose() * form.gram + form.gram * L;
  const std::uint32_t m = form.m;
  std::optional<std::uint32_t> d;
  for (std::size_t i = 0; i < form.gram.dim() && !d; ++i)
    for (std::size_t j = 0; j < form.gram.dim() && !d; ++j) {
      const std::uint32_t w = form.gram.at(i, j);
      if (w != 0 && std::gcd(w, m) == 1) d = static_cast<std::uint32_t>(std::uint64_t(e.at(i, j)) * unit_inverse(w, m) % m);
    }
  if (!d) throw std::invalid_argument("degenerate form");
  if (!(e == form.gram.scaled(*d))) return LieClass{LieFlavor::neither, 0};
  return *d == 0 ? LieClass{LieFlavor::sp, 0} : LieClass{LieFlavor::gsp, *d};
}

MatMod tensor_unit(int g, std::uint32_t m, int i, int j, int mrow, int ncol) {
  require_g(g);
  if (i < 1 || i > 2 || j < 1 || j > 2 || mrow < 1 || mrow > g || ncol < 1 || ncol > g)
    throw std::invalid_argument("tensor index out of range");
  MatMod t(2 * g, m);
  t.set(2 * (mrow - 1) + (i - 1), 2 * (ncol - 1) + (j - 1), 1);
  return t;
}

MatMod scaling_matrix(int g, std::uint32_t m, std::uint32_t alpha) {
  require_g(g);
  MatMod n(2 * g, m);
  for (int i = 0; i < g; ++i) {
    n.set(2 * i, 2 * i, 1);
    n.set(2 * i + 1, 2 * i + 1, static_cast<std::int64_t>(alpha));
  }
  return n;
}

std::vector<BasisElement> sp_basis(int g, std::uint32_t ell) {
  require_g(g);
  if (!arith::is_prime_u64(ell)) throw std::invalid_argument("ell must be prime");
  const std::uint32_t m = ell;
  std::vector<BasisElement> out;
  out.reserve(2 * g * g + g);
  const SympForm form = SympForm::adjacent_pairs(g, m);
  auto push = [&](MatMod mat, int ind, std::string name) {
    const LieClass cls = lie_membership(mat, form);
    if (cls.flavor != LieFlavor::sp)
      throw std::logic_error("sp_basis: element failed the sp condition: " + name);
    out.push_back(BasisElement{std::move(mat), ind, std::move(name)});
  };
  for (int i = 1; i <= g; ++i) {
    const std::string si = std::to_string(i);
    if (ell == 2) {
      push(tensor_unit(g, m, 1, 1, i, i) + tensor_unit(g, m, 2, 2, i, i), i, "id2(x)y" + si + si);
    } else {
      push(tensor_unit(g, m, 1, 1, i, i) - tensor_unit(g, m, 2, 2, i, i), i,
           "(x11-x22)(x)y" + si + si);
    }
    push(tensor_unit(g, m, 1, 2, i, i), i, "x12(x)y" + si + si);
    push(tensor_unit(g, m, 2, 1, i, i), i, "x21(x)y" + si + si);
  }
  for (int i = 1; i <= g; ++i)
    for (int j = i + 1; j <= g; ++j) {
      const std::string sij = std::to_string(i) + std::to_string(j);
      const std::string sji = std::to_string(j) + std::to_string(i);
      push(tensor_unit(g, m, 1, 2, i, j) + tensor_unit(g, m, 1, 2, j, i), i, "x12(x)(y" + sij + "+y" + sji + ")");
      push(tensor_unit(g, m, 1, 1, i, j) - tensor_unit(g, m, 2, 2, j, i), i, "x11(x)y" + sij + "-x22(x)y" + sji);
      push(tensor_unit(g, m, 2, 1, i, j) + tensor_unit(g, m, 2, 1, j, i), i, "x21(x)(y" + sij + "+y" + sji + ")");
      push(tensor_unit(g, m, 2, 2, i, j) - tensor_unit(g, m, 1, 1, j, i), i, "x22(x)y" + sij + "-x11(x)y" + sji);
    }
  if (out.size() != static_cast<std::size_t>(2 * g * g + g)) throw std::logic_error("sp_basis: wrong count");
  return out;
}

std::vector<BasisElement> gsp_basis(int g, std::uint32_t ell) {
  std::vector<BasisElement> out = sp_basis(g, ell);
  MatMod extra(2 * g, ell);
  for (int i = 1; i <= g; ++i) extra = extra + tensor_unit(g, ell, 1, 1, i, i);
  const SympForm form = SympForm::adjacent_pairs(g, ell);
  const LieClass cls = lie_membership(extra, form);
  if (cls.flavor != LieFlavor::gsp || cls.d != 1)
    throw std::logic_error("gsp_basis: x11(x)id_g should have d = 1");
  out.push_back(BasisElement{std::move(extra), 0, "x11(x)id_g"});
  return out;
}

MatSpan::MatSpan(std::uint32_t ell, std::size_t len) : ell_(ell), len_(len) {
  if (!arith::is_prime_u64(ell)) throw std::invalid_argument("ell must be prime");
}

void MatSpan::reduce(std::vector<std::uint32_t>& v) const {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const std::uint32_t c = v[pivots_[r]];
    if (c == 0) continue;
    // rows are pivot-normalized, so subtract c * row
    for (std::size_t k = 0; k < len_; ++k)
      v[k] = static_cast<std::uint32_t>((v[k] + std::uint64_t(c) * (ell_ - rows_[r][k] % ell_)) % ell_);
  }
}

bool MatSpan::add(std::vector<std::uint32_t> v) {
  if (v.size() != len_) throw std::invalid_argument("vector length mismatch");
  for (auto& x : v) x %= ell_;
  reduce(v);
  std::size_t pivot = len_;
  for (std::size_t k = 0; k < len_; ++k)
    if (v[k] != 0) {
      pivot = k;
      break;
    }
  if (pivot == len_) return false;
  const std::uint32_t inv = unit_inverse(v[pivot], ell_);
  for (auto& x : v) x = static_cast<std::uint32_t>(std::uint64_t(x) * inv % ell_);
  rows_.push_back(std::move(v));
  pivots_.push_back(pivot);
  return true;
}

bool MatSpan::contains(std::vector<std::uint32_t> v) const {
  if (v.size() != len_) throw std::invalid_argument("vector length mismatch");
  for (auto& x : v) x %= ell_;
  reduce(v);
  for (const auto x : v)
    if (x != 0) return false;
  return true;
}

std::vector<std::uint32_t> flatten(const MatMod& m) {
  std::vector<std::uint32_t> v;
  v.reserve(m.dim() * m.dim());
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j) v.push_back(m.at(i, j));
  return v;
}

SpanCheck commutator_span_check(int g, std::uint32_t ell) {
  const std::vector<BasisElement> basis = gsp_basis(g, ell);
  const SympForm form = SympForm::adjacent_pairs(g, ell);
  MatSpan span(ell, static_cast<std::size_t>(2 * g) * (2 * g));
  for (std::size_t a = 0; a < basis.size(); ++a)
    for (std::size_t b = a + 1; b < basis.size(); ++b) {
      const MatMod bracket = basis[a].mat * basis[b].mat - basis[b].mat * basis[a].mat;
      if (lie_membership(bracket, form).flavor != LieFlavor::sp)
        throw std::logic_error("commutator_span_check: bracket left sp");
      span.add(flatten(bracket));
    }
  SpanCheck res;
  res.expected = static_cast<std::size_t>(2 * g * g + g);
  res.dim = span.dim();
  bool all_contained = true;
  for (const BasisElement& e : sp_basis(g, ell))
    if (!span.contains(flatten(e.mat))) all_contained = false;
  res.equal = all_contained && res.dim == res.expected;
  return res;
}

MatMod lift_layer(const MatMod& L, int k) {
  if (k < 1 || k > 19) throw std::invalid_argument("layer index out of range");
  const std::uint32_t m = std::uint32_t(1) << (k + 1);
  const std::uint32_t step = std::uint32_t(1) << k;
  MatMod out = MatMod::identity(L.dim(), m);
  for (std::size_t i = 0; i < L.dim(); ++i)
    for (std::size_t j = 0; j < L.dim(); ++j)
      if (L.at(i, j) % 2 != 0) out.set(i, j, static_cast<std::int64_t>(out.at(i, j)) + step);
  return out;
}

BigInt sp2g_f2_order(int g) {
  require_g(g);
  BigInt order = 1;
  mpz_mul_2exp(order.get_mpz_t(), order.get_mpz_t(), static_cast<mp_bitcnt_t>(g) * g);
  for (int i = 1; i <= g; ++i) {
    BigInt term = 1;
    mpz_mul_2exp(term.get_mpz_t(), term.get_mpz_t(), 2 * static_cast<mp_bitcnt_t>(i));
    order *= term - 1;
  }
  return order;
}

BigInt group_order(int g, int k) {
  require_g(g);
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  BigInt order = sp2g_f2_order(g);
  mpz_mul_2exp(order.get_mpz_t(), order.get_mpz_t(),
               static_cast<mp_bitcnt_t>(k - 1) * (2 * static_cast<mp_bitcnt_t>(g) * g + g));
  return order;
}

}  // namespace galmax::symplectic
