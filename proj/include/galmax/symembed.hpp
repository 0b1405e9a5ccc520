#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "galmax/matmod.hpp"

namespace galmax::symembed {

/// Permutations of {0, .., n-1} in one-line notation: perm[i] is the image of
/// letter i. Composition convention: (a * b)(i) = a(b(i)).
using Perm = std::vector<int>;

Perm perm_identity(int n);
bool perm_valid(const Perm& p);
Perm perm_mul(const Perm& a, const Perm& b);
Perm perm_inverse(const Perm& a);
/// The adjacent transposition (k, k+1) in 1-indexed letters, as a permutation
/// of {0..n-1}; requires 1 <= k <= n-1.
Perm adjacent_transposition(int n, int k);
/// Writes s as a product of adjacent transpositions: s = T_{k_r} ... T_{k_1}
/// for the returned list (k_1, ..., k_r) (1-indexed), via bubble sort.
std::vector<int> adjacent_decomposition(const Perm& s);

/// The symplectic identification between M = F_2^{2g} (adjacent-pairs form)
/// and W = t-perp / <t> inside V = F_2^{2g+2}, where t = (1,...,1) and V
/// carries the standard dot product. Vectors of V are stored as bitmasks; the
/// canonical coset representative of W has its last coordinate equal to 0.
struct EmbeddingData {
  int g = 0;
  /// psi of the M-basis vector with index r = 2(n-1)+(i-1)  (i.e. x_i (x) y_n),
  /// as a canonical W-representative bitmask in F_2^{2g+2}:
  ///   x_1 (x) y_n -> e_1 + ... + e_{2n}
  ///   x_2 (x) y_n -> e_{2n+1} + e_1 + ... + e_{2n-1}
  std::vector<std::uint32_t> psi_image;
  /// Echelonized copy of psi_image with back-pointers, for solving psi(v) = u.
  std::vector<std::uint32_t> ech_mask;
  std::vector<std::uint32_t> ech_comb;  // combination over M-basis as bitmask
  std::uint32_t t_mask = 0;             // all-ones vector of F_2^{2g+2}
};

/// Builds psi and verifies that it intertwines the symplectic forms on every
/// basis pair and kills t; throws std::logic_error on any mismatch.
EmbeddingData build_embedding(int g);

/// Canonical W-representative of an even-weight mask (clears the last bit by
/// adding t when necessary).
std::uint32_t canonical_w(const EmbeddingData& e, std::uint32_t mask);

/// Solves psi(v) = [mask]; returns v as a bitmask over the M-basis, or throws
/// std::domain_error if mask does not represent an element of W.
std::uint32_t psi_solve(const EmbeddingData& e, std::uint32_t mask);

/// The matrix of the transposition (k, k+1) acting on M, from the closed
/// formulas (any out-of-range tensor index contributes nothing):
///   T_{2n}   = id + (x_11+x_12+x_21+x_22) (x) y_nn
///   T_{2n+1} = id + x_12 (x) (y_nn + y_{(n+1)n} + y_{n(n+1)} + y_{(n+1)(n+1)})
/// Requires 1 <= k <= 2g+1; the result is an involution with multiplier 1.
MatMod transposition_matrix(int g, int k);

/// T_1, ..., T_{2g+1}: generators of the embedded S_{2g+2} in Sp_{2g}(F_2).
std::vector<MatMod> transposition_generators(int g);

/// The image of sigma in S_{2g+2} under the embedding, computed two ways --
/// multiplying transposition matrices along an adjacent-transposition
/// decomposition, and directly conjugating the coordinate-permutation action
/// through psi -- and cross-checked; throws std::logic_error on disagreement.
MatMod embed_permutation(int g, const Perm& sigma);

/// Same as embed_permutation but using only the direct psi-conjugation route.
MatMod embed_via_action(const EmbeddingData& e, const Perm& sigma);

struct ConjSpanResult {
  bool equal = false;
  std::size_t dim = 0;
  std::size_t expected = 0;
  bool witnesses_ok = false;
  std::vector<std::string> failures;
};

/// Computes V = span{ L + T_k L T_k^{-1} : L in a gsp_{2g}(F_2) basis,
/// 1 <= k <= 2g } (only transpositions fixing the last letter, i.e. lying in
/// S_{2g+1}) and compares with sp_{2g}(F_2); also verifies the targeted
/// witness families jc1-jc9: jc1, jc2, jc3, jc5, jc9 as exact matrix
/// identities and jc4, jc6, jc7, jc8 as membership in the computed span.
ConjSpanResult conjugation_span_check(int g);

}  // namespace galmax::symembed
