#pragma once

/// Orbit / stabilizer-chain (Schreier–Sims) engine for finite matrix groups
/// acting on (Z/m)^n by left multiplication.
///
/// The construction is randomized (product replacement) with two independent
/// certification routes:
///   - a deterministic verification sweep that sifts every Schreier generator
///     of every level, completing the chain where it fails; or
///   - a caller-supplied order certificate: when the caller proves separately
///     that the generated group is contained in a group of known order N, the
///     product of orbit sizes reaching exactly N certifies both the chain and
///     the equality <gens> = that group (the product is always a lower bound
///     for |<gens>| and can never exceed the order of a containing group).
///
/// Transversals are stored as Schreier vectors (parent pointer + generator
/// index); transversal matrices are reconstructed by path walks, which keeps
/// the memory footprint linear in the orbit with small constants.

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "galmax/bigint.hpp"
#include "galmax/matmod.hpp"

namespace galmax::matgrp {

/// A single orbit with explicit transversal matrices, for small actions.
struct Orbit {
  std::vector<std::uint64_t> points;  // encoded, BFS discovery order (seed first)
  std::unordered_map<std::uint64_t, MatMod> transversal;  // u with u * seed = point
};

/// BFS closure of v under the generators. Every transversal entry satisfies
/// transversal[p] * v = decode(p).
Orbit orbit(const std::vector<MatMod>& gens, const std::vector<std::uint32_t>& v);

class StabChain {
 public:
  /// Group order as the product of orbit sizes. Throws std::logic_error on an
  /// unverified chain.
  BigInt order() const;

  /// Membership by sifting. Throws std::logic_error on an unverified chain,
  /// std::invalid_argument on a dimension/modulus mismatch.
  bool contains(const MatMod& m) const;

  bool verified() const { return verified_; }
  std::size_t depth() const { return levels_.size(); }
  std::vector<std::vector<std::uint32_t>> base() const;

  /// Reduces m through the chain: returns the residue and the level at which
  /// reduction stopped (depth() when m reduced through every level). A
  /// residue equal to the identity certifies membership in <strong gens>.
  std::pair<MatMod, std::size_t> sift(const MatMod& m) const;

  /// Every strong generator recorded during construction, insertion order.
  const std::vector<MatMod>& strong_generators() const { return strong_; }

  /// Orbit sizes per level (diagnostics / tests).
  std::vector<std::uint64_t> orbit_sizes() const;

 private:
  friend class ChainBuilder;

  struct Edge {
    std::int32_t gen = -1;       // index into Level::gens; -1 marks the base point
    std::uint64_t parent = 0;    // encoded predecessor on the BFS tree
  };

  struct Level {
    std::vector<std::uint32_t> base_point;
    std::uint64_t base_code = 0;
    std::vector<MatMod> gens, gen_invs;
    std::unordered_map<std::uint64_t, Edge> tree;  // orbit point -> BFS edge
    std::vector<std::uint64_t> discovery;          // deterministic iteration order
    std::size_t processed = 0;                     // BFS frontier watermark
  };

  MatMod transversal(std::size_t level, std::uint64_t code) const;
  MatMod transversal_inv(std::size_t level, std::uint64_t code) const;
  std::pair<MatMod, std::size_t> sift_from(MatMod m, std::size_t start) const;

  std::vector<Level> levels_;
  std::vector<MatMod> strong_;
  std::uint32_t n_ = 0, m_ = 0;
  bool verified_ = false;
};

struct BuildOptions {
  /// Order of a group the caller knows contains <gens>. When the product of
  /// orbit sizes reaches this value the chain is certified without the
  /// deterministic sweep (see the header comment for why that is sound).
  std::optional<BigInt> known_order;
  /// Run the deterministic Schreier sweep even when known_order certified
  /// early (belt-and-braces mode for long-running verification).
  bool force_schreier_sweep = false;
};

/// Builds a verified stabilizer chain for <gens>. Deterministic for a fixed
/// seed. Base points are chosen greedily: the point with the largest orbit
/// under the generators known to fix all earlier base points, ties broken by
/// the lexicographically least vector (index 0 first).
StabChain schreier_sims(const std::vector<MatMod>& gens, std::uint64_t seed,
                        const BuildOptions& opts = {});

/// The symplectic transvection I + lambda * v (v^T Omega) over Z/m
/// (adjacent-pairs form); multiplier 1 for every v and lambda.
MatMod symplectic_transvection(int g, std::uint32_t m, const std::vector<std::uint32_t>& v,
                               std::int64_t lambda);

/// Generating set of the full Sp_2g(Z/2^k): the transvections with v running
/// over the weight-<=2 vectors {e_i} u {e_i + e_j}.
std::vector<MatMod> symplectic_group_generators(int g, int k);

/// Generating set for the full preimage of the embedded S_{2g+2} inside the
/// multiplier-1 symplectic group mod 2^k: transvection lifts of the
/// transposition matrices T_1..T_{2g+1} plus the kernel transvections
/// I - 2 v (v^T Omega) for the weight-<=2 v's.
std::vector<MatMod> builtin_preimage_generators(int g, int k);

/// Loads a generator set from JSON of the form
///   {"g": 3, "modulus": 8, "matrices": [[row-major entries], ...]}
/// (the bundled mod-8 generator pair ships in this format). Throws
/// std::invalid_argument on malformed input.
std::vector<MatMod> load_generator_file(const std::string& path);

struct PreimageCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct PreimageReport {
  int g = 0, k = 0;
  bool pass = false;
  BigInt target_order;  // (2g+2)! * 2^((k-1)(2g^2+g))
  BigInt mod2_order;    // order of the mod-2 image
  BigInt group_order;   // order of <gens> mod 2^k
  std::vector<PreimageCheck> checks;
};

/// Certifies that <gens> equals the full preimage of the embedded S_{2g+2}
/// in the multiplier-1 symplectic group mod 2^k, via three checks:
///   (i)  every generator is symplectic with multiplier 1 mod 2^k;
///   (ii) every mod-2 image lies in the embedded S_{2g+2} and the images
///        generate it (order (2g+2)!);
///   (iii) |<gens>| equals (2g+2)! * 2^((k-1)(2g^2+g)).
/// (i) + (ii) prove containment in the preimage, whose order is the target;
/// (iii) then forces equality. force_sweep additionally runs the full
/// deterministic Schreier verification instead of stopping at the order
/// certificate.
PreimageReport verify_preimage_generation(int g, int k, const std::vector<MatMod>& gens,
                                          std::uint64_t seed, bool force_sweep = false);

struct FalsifierResult {
  int trials = 0;
  int full_order_hits = 0;  // trials whose subgroup was the whole preimage
  std::vector<std::string> notes;
};

/// Statistical support (not proof) for "no strict subgroup surjects onto
/// S_{2g+2}": samples random pairs from the group generated by sampling_gens
/// (which should be a certified generating set of the full preimage), keeps
/// the pairs whose mod-2 images generate the embedded S_{2g+2}, and reports
/// how many of those pairs already generate the full preimage.
FalsifierResult preimage_falsifier(int g, int k, int trials, std::uint64_t seed,
                                   const std::vector<MatMod>& sampling_gens);

}  // namespace galmax::matgrp
