#include "galmax/symembed.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <stdexcept>

#include "galmax/symplectic.hpp"

namespace galmax::symembed {


namespace sy = galmax::symplectic;

namespace {

int parity(std::uint32_t x) { return std::popcount(x) & 1; }

/// 2x2 matrices over F_2, row-major {a11, a12, a21, a22}.
using Mat2 = std::array<std::uint32_t, 4>;

constexpr Mat2 kX11{1, 0, 0, 0}, kX12{0, 1, 0, 0}, kX21{0, 0, 1, 0}, kX22{0, 0, 0, 1};
constexpr Mat2 kAllOnes{1, 1, 1, 1};

Mat2 mat2_mul(const Mat2& a, const Mat2& b) {
  return Mat2{(a[0] * b[0] + a[1] * b[2]) & 1u, (a[0] * b[1] + a[1] * b[3]) & 1u,
              (a[2] * b[0] + a[3] * b[2]) & 1u, (a[2] * b[1] + a[3] * b[3]) & 1u};
}

/// The involution phi: transposition across the anti-diagonal (mod 2).
Mat2 phi(const Mat2& m) { return Mat2{m[3], m[1], m[2], m[0]}; }

/// M (x) y_{mn} for a 2x2 matrix M over F_2  (1-indexed m, n).
MatMod tensor_of(int g, const Mat2& m2, int mrow, int ncol) {
  MatMod out(2 * g, 2);
  int idx = 0;
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 2; ++j, ++idx)
      if (m2[idx]) out = out + sy::tensor_unit(g, 2, i, j, mrow, ncol);
  return out;
}

/// M (x) y_{mn} contributed only when both indices are in range (the
/// out-of-range-is-zero convention of the transposition formulas).
void add_if_in_range(int g, MatMod& acc, const Mat2& m2, int mrow, int ncol) {
  if (mrow < 1 || mrow > g || ncol < 1 || ncol > g) return;
  acc = acc + tensor_of(g, m2, mrow, ncol);
}

}  // namespace

Perm perm_identity(int n) {
  Perm p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  return p;
}

bool perm_valid(const Perm& p) {
  std::vector<bool> seen(p.size(), false);
  for (const int x : p) {
    if (x < 0 || x >= static_cast<int>(p.size()) || seen[x]) return false;
    seen[x] = true;
  }
  return true;
}

Perm perm_mul(const Perm& a, const Perm& b) {
  if (a.size() != b.size()) throw std::invalid_argument("size mismatch");
  Perm out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[b[i]];
  return out;
}

Perm perm_inverse(const Perm& a) {
  Perm out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[a[i]] = static_cast<int>(i);
  return out;
}

Perm adjacent_transposition(int n, int k) {
  if (k < 1 || k >= n) throw std::invalid_argument("transposition index out of range");
  Perm p = perm_identity(n);
  std::swap(p[k - 1], p[k]);
  return p;
}

std::vector<int> adjacent_decomposition(const Perm& s) {
  if (!perm_valid(s)) throw std::invalid_argument("not a permutation");
  Perm arr = s;
  std::vector<int> ks;
  bool swapped = true;
  while (swapped) {
    swapped = false;
    for (std::size_t i = 0; i + 1 < arr.size(); ++i)
      if (arr[i] > arr[i + 1]) {
        std::swap(arr[i], arr[i + 1]);
        // Swapping one-line positions i, i+1 right-composes s with the letter
        // transposition (i+1, i+2) (1-indexed), so s = T_{k_r} ... T_{k_1}.
        ks.push_back(static_cast<int>(i) + 1);
        swapped = true;
      }
  }
  return ks;
}

EmbeddingData build_embedding(int g) {
  if (g < 1 || g > 14) throw std::invalid_argument("genus-rank out of range");
  EmbeddingData e;
  e.g = g;
  e.t_mask = (std::uint32_t(1) << (2 * g + 2)) - 1;
  e.psi_image.resize(2 * g);
  for (int n = 1; n <= g; ++n) {
    e.psi_image[2 * (n - 1)] = (std::uint32_t(1) << (2 * n)) - 1;  // e_1 + ... + e_{2n}
    e.psi_image[2 * (n - 1) + 1] =
        ((std::uint32_t(1) << (2 * n - 1)) - 1) | (std::uint32_t(1) << (2 * n));
  }
  // Intertwining check on every basis pair: the W form is the dot product on
  // t-perp representatives; the M form is the adjacent-pairs Gram mod 2.
  const sy::SympForm form = sy::SympForm::adjacent_pairs(g, 2);
  for (int r = 0; r < 2 * g; ++r) {
    if (parity(e.psi_image[r]) != 0) throw std::logic_error("psi image not in t-perp");
    for (int s = 0; s < 2 * g; ++s) {
      const int lhs = parity(e.psi_image[r] & e.psi_image[s]);
      const int rhs = static_cast<int>(form.gram.at(r, s));
      if (lhs != rhs) throw std::logic_error("psi does not intertwine the symplectic forms");
    }
  }
  // Echelonize the images (by lowest set bit) with combination tracking.
  for (int r = 0; r < 2 * g; ++r) {
    std::uint32_t mask = e.psi_image[r];
    std::uint32_t comb = std::uint32_t(1) << r;
    for (std::size_t row = 0; row < e.ech_mask.size(); ++row) {
      const std::uint32_t pivot = e.ech_mask[row] & ~(e.ech_mask[row] - 1);
      if (mask & pivot) {
        mask ^= e.ech_mask[row];
        comb ^= e.ech_comb[row];
      }
    }
    if (mask == 0) throw std::logic_error("psi images are dependent");
    e.ech_mask.push_back(mask);
    e.ech_comb.push_back(comb);
  }
  return e;
}

std::uint32_t canonical_w(const EmbeddingData& e, std::uint32_t mask) {
  if (parity(mask) != 0) throw std::domain_error("vector not in t-perp");
  if (mask & (std::uint32_t(1) << (2 * e.g + 1))) mask ^= e.t_mask;
  return mask;
}

std::uint32_t psi_solve(const EmbeddingData& e, std::uint32_t mask) {
  std::uint32_t v = canonical_w(e, mask);
  std::uint32_t comb = 0;
  for (std::size_t row = 0; row < e.ech_mask.size(); ++row) {
    const std::uint32_t pivot = e.ech_mask[row] & ~(e.ech_mask[row] - 1);
    if (v & pivot) {
      v ^= e.ech_mask[row];
      comb ^= e.ech_comb[row];
    }
  }
  if (v != 0) throw std::domain_error("vector not in the image of psi");
  return comb;
}

MatMod transposition_matrix(int g, int k) {
  if (g < 1 || g > 14) throw std::invalid_argument("genus-rank out of range");
  if (k < 1 || k > 2 * g + 1) throw std::invalid_argument("transposition index out of range");
  MatMod delta(2 * g, 2);
  if (k % 2 == 0) {
    const int n = k / 2;
    delta = tensor_of(g, kAllOnes, n, n);
  } else {
    const int n = (k - 1) / 2;
    add_if_in_range(g, delta, kX12, n, n);
    add_if_in_range(g, delta, kX12, n + 1, n);
    add_if_in_range(g, delta, kX12, n, n + 1);
    add_if_in_range(g, delta, kX12, n + 1, n + 1);
  }
  return MatMod::identity(2 * g, 2) + delta;
}

std::vector<MatMod> transposition_generators(int g) {
  std::vector<MatMod> out;
  out.reserve(2 * g + 1);
  for (int k = 1; k <= 2 * g + 1; ++k) out.push_back(transposition_matrix(g, k));
  return out;
}

MatMod embed_via_action(const EmbeddingData& e, const Perm& sigma) {
  const int n_letters = 2 * e.g + 2;
  if (static_cast<int>(sigma.size()) != n_letters || !perm_valid(sigma))
    throw std::invalid_argument("sigma must be a permutation of 2g+2 letters");
  MatMod a(2 * e.g, 2);
  for (int r = 0; r < 2 * e.g; ++r) {
    const std::uint32_t u = e.psi_image[r];
    std::uint32_t v = 0;
    for (int pos = 0; pos < n_letters; ++pos)
      if (u & (std::uint32_t(1) << pos)) v |= std::uint32_t(1) << sigma[pos];
    const std::uint32_t col = psi_solve(e, v);
    for (int row = 0; row < 2 * e.g; ++row)
      if (col & (std::uint32_t(1) << row)) a.set(row, r, 1);
  }
  return a;
}

MatMod embed_permutation(int g, const Perm& sigma) {
  const EmbeddingData e = build_embedding(g);
  const MatMod direct = embed_via_action(e, sigma);
  MatMod product = MatMod::identity(2 * g, 2);
  for (const int k : adjacent_decomposition(sigma)) product = transposition_matrix(g, k) * product;
  if (!(product == direct))
    throw std::logic_error("transposition-product and psi-conjugation routes disagree");
  return direct;
}

ConjSpanResult conjugation_span_check(int g) {
  ConjSpanResult res;
  res.expected = static_cast<std::size_t>(2 * g * g + g);
  const sy::SympForm form = sy::SympForm::adjacent_pairs(g, 2);
  const std::vector<sy::BasisElement> gsp = sy::gsp_basis(g, 2);
  std::vector<MatMod> ts;  // T_1 .. T_{2g}: the transpositions inside S_{2g+1}
  for (int k = 1; k <= 2 * g; ++k) ts.push_back(transposition_matrix(g, k));

  auto conj_sum = [&](const MatMod& lam, int k) {
    // T_k is an involution, so T_k^{-1} = T_k.
    return lam + ts[k - 1] * lam * ts[k - 1];
  };

  sy::MatSpan span(2, static_cast<std::size_t>(2 * g) * (2 * g));
  for (const sy::BasisElement& be : gsp)
    for (int k = 1; k <= 2 * g; ++k) {
      const MatMod x = conj_sum(be.mat, k);
      if (sy::lie_membership(x, form).flavor != sy::LieFlavor::sp)
        throw std::logic_error("conjugation image left sp");
      span.add(sy::flatten(x));
    }
  res.dim = span.dim();
  bool contained = true;
  for (const sy::BasisElement& be : sy::sp_basis(g, 2))
    if (!span.contains(sy::flatten(be.mat))) contained = false;
  res.equal = contained && res.dim == res.expected;

  // Targeted witness families from the inductive span argument.
  auto expect_eq = [&](const MatMod& got, const MatMod& want, const std::string& tag) {
    if (!(got == want)) res.failures.push_back(tag + ": identity mismatch");
  };
  auto expect_in_span = [&](const MatMod& m, const std::string& tag) {
    if (!span.contains(sy::flatten(m))) res.failures.push_back(tag + ": not in span");
  };

  MatMod lam_def(2 * g, 2);  // x_11 (x) id_g
  for (int i = 1; i <= g; ++i) lam_def = lam_def + sy::tensor_unit(g, 2, 1, 1, i, i);

  for (int n = 1; n <= g; ++n) {
    // jc1: Lambda + T_{2n} Lambda T_{2n} = id_2 (x) y_nn for Lambda = x_11 (x) id_g.
    expect_eq(conj_sum(lam_def, 2 * n),
              tensor_of(g, Mat2{1, 0, 0, 1}, n, n), "jc1 n=" + std::to_string(n));
    // jc2: with T_{2n-1}: x_12 (x) (y_{(n-1)(n-1)} + y_{(n-1)n} + y_{n(n-1)} + y_nn).
    MatMod want2(2 * g, 2);
    add_if_in_range(g, want2, kX12, n - 1, n - 1);
    add_if_in_range(g, want2, kX12, n - 1, n);
    add_if_in_range(g, want2, kX12, n, n - 1);
    add_if_in_range(g, want2, kX12, n, n);
    expect_eq(conj_sum(lam_def, 2 * n - 1), want2, "jc2 n=" + std::to_string(n));
    // jc9: Lambda = x_12 (x) y_nn with T_{2n}: (x_12 + x_21) (x) y_nn.
    expect_eq(conj_sum(tensor_of(g, kX12, n, n), 2 * n),
              tensor_of(g, Mat2{0, 1, 1, 0}, n, n), "jc9 n=" + std::to_string(n));
  }

  for (int n = 1; n <= g; ++n)
    for (int l = n + 1; l <= g; ++l) {
      const std::string nl = " n=" + std::to_string(n) + " l=" + std::to_string(l);
      // All sixteen 2x2 matrices M: Lambda = M (x) y_nl + phi(M) (x) y_ln is in gsp.
      for (std::uint32_t bits = 0; bits < 16; ++bits) {
        const Mat2 m2{bits & 1u, (bits >> 1) & 1u, (bits >> 2) & 1u, (bits >> 3) & 1u};
        const MatMod lam = tensor_of(g, m2, n, l) + tensor_of(g, phi(m2), l, n);
        if (sy::lie_membership(lam, form).flavor == sy::LieFlavor::neither)
          throw std::logic_error("witness Lambda not in gsp");
        // jc5: with T_{2n}: (Sigma M) (x) y_nl + (phi(M) Sigma) (x) y_ln.
        expect_eq(conj_sum(lam, 2 * n),
                  tensor_of(g, mat2_mul(kAllOnes, m2), n, l) +
                      tensor_of(g, mat2_mul(phi(m2), kAllOnes), l, n),
                  "jc5" + nl + " M=" + std::to_string(bits));
        // jc3: with T_{2n-1}: x_12 M (x) (y_nl + y_{(n-1)l}) + phi(M) x_12 (x) (y_ln + y_{l(n-1)}).
        MatMod want3(2 * g, 2);
        add_if_in_range(g, want3, mat2_mul(kX12, m2), n, l);
        add_if_in_range(g, want3, mat2_mul(kX12, m2), n - 1, l);
        add_if_in_range(g, want3, mat2_mul(phi(m2), kX12), l, n);
        add_if_in_range(g, want3, mat2_mul(phi(m2), kX12), l, n - 1);
        expect_eq(conj_sum(lam, 2 * n - 1), want3, "jc3" + nl + " M=" + std::to_string(bits));
      }
      // jc6: (x_11 + x_21) (x) y_nl + (x_21 + x_22) (x) y_ln.
      expect_in_span(tensor_of(g, Mat2{1, 0, 1, 0}, n, l) + tensor_of(g, Mat2{0, 0, 1, 1}, l, n),
                     "jc6" + nl);
      // jc7: (x_12 + x_22) (x) y_nl + (x_11 + x_12) (x) y_ln.
      expect_in_span(tensor_of(g, Mat2{0, 1, 0, 1}, n, l) + tensor_of(g, Mat2{1, 1, 0, 0}, l, n),
                     "jc7" + nl);
      // jc4: x_12 (x) (y_nl + y_ln).
      expect_in_span(tensor_of(g, kX12, n, l) + tensor_of(g, kX12, l, n), "jc4" + nl);
      // jc8: x_11 (x) y_nl + x_22 (x) y_ln.
      expect_in_span(tensor_of(g, kX11, n, l) + tensor_of(g, kX22, l, n), "jc8" + nl);
    }

  res.witnesses_ok = res.failures.empty();
  return res;
}

}  // namespace galmax::symembed
