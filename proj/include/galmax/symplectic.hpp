#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "galmax/bigint.hpp"
#include "galmax/matmod.hpp"

namespace galmax::symplectic {

/// Which standard Gram matrix a piece of data is expressed in. Two bases
/// coexist in this project:
///   - block:          Omega = [[0, I_g], [-I_g, 0]]
///   - adjacent_pairs: Omega = diag([[0,1],[-1,0]], ..., [[0,1],[-1,0]]),
///     i.e. <e_i, e_j> = j - i when |j - i| = 1 and max(i,j) is even.
/// All embedding and generator data in this project is adjacent-pairs
/// relative; the block form is used for structural arguments. The two are
/// related by the explicit change of basis below.
enum class FormKind { block, adjacent_pairs };

struct SympForm {
  int g = 0;
  std::uint32_t m = 0;
  FormKind kind = FormKind::adjacent_pairs;
  MatMod gram;

  static SympForm block(int g, std::uint32_t m);
  static SympForm adjacent_pairs(int g, std::uint32_t m);
};

/// Permutation matrix P whose j-th column is the block-basis coordinate
/// vector of the j-th adjacent-pairs basis vector (a_i -> e_{2i-1},
/// b_i -> e_{2i}); satisfies P^T * Omega_block * P = Omega_adjacent.
MatMod block_to_adjacent_change(int g, std::uint32_t m);

/// The multiplier m_S with S^T Omega S = m_S Omega, if one exists and is a
/// unit; nullopt otherwise (S not in GSp for this form).
std::optional<std::uint32_t> multiplier(const MatMod& S, const SympForm& form);

enum class LieFlavor { sp, gsp, neither };
struct LieClass {
  LieFlavor flavor = LieFlavor::neither;
  std::uint32_t d = 0;  // the scalar with L^T Omega + Omega L = d Omega (gsp)
};

/// Classifies L against the Lie-algebra condition L^T Omega + Omega L = d Omega:
/// d = 0 -> sp, unit-or-nonzero d -> gsp (with d reported), no scalar -> neither.
LieClass lie_membership(const MatMod& L, const SympForm& form);

/// The elementary tensor x_{ij} (x) y_{mn} as a 2g x 2g matrix: a single 1 at
/// row 2(m-1)+(i-1), column 2(n-1)+(j-1) (adjacent-pairs indexing,
/// x_i (x) y_j <-> e_{2j+i-2}). Arguments are 1-indexed: i,j in {1,2},
/// mrow,ncol in {1..g}.
MatMod tensor_unit(int g, std::uint32_t m, int i, int j, int mrow, int ncol);

/// The scaling matrix N_alpha = diag(1, alpha, 1, alpha, ...) (adjacent-pairs
/// basis); has multiplier alpha.
MatMod scaling_matrix(int g, std::uint32_t m, std::uint32_t alpha);

struct BasisElement {
  MatMod mat;
  int ind = 0;  // the "ind" label: the value of i for each basis element
  std::string name;
};

/// Basis of sp_{2g}(Z/ell) of size 2g^2+g in adjacent-pairs tensor notation.
/// For ell = 2 this is exactly the classical list
///   id_2 (x) y_ii, x_12 (x) y_ii, x_21 (x) y_ii            (i = 1..g)
///   x_12 (x) (y_ij+y_ji), x_11 (x) y_ij + x_22 (x) y_ji,
///   x_21 (x) (y_ij+y_ji), x_22 (x) y_ij + x_11 (x) y_ji    (1 <= i < j <= g)
/// with ind = i throughout; for odd ell the diagonal triple uses
/// (x_11 - x_22) (x) y_ii and the mixed pairs carry the signs that make them
/// sp over any ring.
std::vector<BasisElement> sp_basis(int g, std::uint32_t ell);

/// sp_basis plus the multiplier direction x_11 (x) id_g (d = 1), ind = 0.
std::vector<BasisElement> gsp_basis(int g, std::uint32_t ell);

/// Row space over F_ell of flattened matrices; Gaussian elimination with
/// first-nonzero-pivot tie-breaking (deterministic).
class MatSpan {
 public:
  MatSpan(std::uint32_t ell, std::size_t len);
  /// Adds v to the span; returns true if the dimension grew.
  bool add(std::vector<std::uint32_t> v);
  bool contains(std::vector<std::uint32_t> v) const;
  std::size_t dim() const { return rows_.size(); }

 private:
  void reduce(std::vector<std::uint32_t>& v) const;
  std::uint32_t ell_;
  std::size_t len_;
  std::vector<std::vector<std::uint32_t>> rows_;  // pivot-normalized
  std::vector<std::size_t> pivots_;
};

std::vector<std::uint32_t> flatten(const MatMod& M);

struct SpanCheck {
  bool equal = false;
  std::size_t dim = 0;
  std::size_t expected = 0;
};

/// Spans all pairwise brackets of a gsp_{2g}(F_ell) basis and compares the
/// result with sp_{2g}(F_ell); "equal" (the perfectness of gsp in the bracket
/// sense) is expected for every prime ell, with dim = 2g^2+g.
SpanCheck commutator_span_check(int g, std::uint32_t ell);

/// id + 2^k L as a matrix mod 2^{k+1} (entries of L taken mod 2); the
/// parametrization of ker(GSp(Z/2^{k+1}) -> GSp(Z/2^k)) by gsp_{2g}(F_2).
MatMod lift_layer(const MatMod& L, int k);

/// |Sp_{2g}(F_2)| by the classical order formula 2^{g^2} prod_{i=1}^g (4^i-1).
BigInt sp2g_f2_order(int g);

/// |Sp_{2g}(Z/2^k)| = |Sp_{2g}(F_2)| * 2^{(k-1)(2g^2+g)}.
BigInt group_order(int g, int k);

}  // namespace galmax::symplectic
