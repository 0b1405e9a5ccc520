#include "doctest.h"

#include <cstdint>
#include <fstream>
#include <set>
#include <stdexcept>
#include <vector>

#include "galmax/bigint.hpp"
#include "galmax/matgrp.hpp"
#include "galmax/symembed.hpp"
#include "galmax/symplectic.hpp"

using namespace galmax;
namespace mg = galmax::matgrp;

TEST_CASE("orbit: closure and transversal certificates") {
  const auto ts = symembed::transposition_generators(2);
  const std::vector<std::uint32_t> seed{1, 0, 0, 0};
  const auto orb = mg::orbit(ts, seed);
  CHECK(orb.points.size() == 15);
  CHECK(orb.points.front() == ts[0].encode_vector(seed));
  for (const auto p : orb.points) {
    const auto& u = orb.transversal.at(p);
    CHECK(u.encode_vector(u.apply(seed)) == p);
  }
  // Identity-only group: singleton orbit.
  const auto triv = mg::orbit({MatMod::identity(4, 2)}, seed);
  CHECK(triv.points.size() == 1);
}

TEST_CASE("schreier_sims: embedded symmetric groups, with and without the order hint") {
  // g = 2 without any hint: the deterministic sweep must verify 720 on its own.
  const auto ts2 = symembed::transposition_generators(2);
  const auto plain = mg::schreier_sims(ts2, 42);
  CHECK(plain.verified());
  CHECK(plain.order() == 720);

  // Same group with the known-order shortcut: identical order.
  mg::BuildOptions hint;
  hint.known_order = BigInt(720);
  const auto fast = mg::schreier_sims(ts2, 42, hint);
  CHECK(fast.order() == 720);

  // Forced sweep on top of the hint changes nothing.
  hint.force_schreier_sweep = true;
  CHECK(mg::schreier_sims(ts2, 42, hint).order() == 720);

  // Membership: every original generator sifts to the identity.
  for (const auto& t : ts2) {
    CHECK(plain.contains(t));
    const auto [residue, level] = plain.sift(t);
    CHECK(residue.is_identity());
    CHECK(level == plain.depth());
  }

  // Order is the product of the per-level orbit sizes.
  BigInt prod(1);
  for (const auto s : plain.orbit_sizes()) prod *= BigInt(static_cast<unsigned long>(s));
  CHECK(prod == 720);

  // Dimension mismatch is rejected.
  CHECK_THROWS_AS(plain.contains(MatMod::identity(6, 2)), std::invalid_argument);

  // g = 3: |S_8| = 40320.
  const auto ts3 = symembed::transposition_generators(3);
  mg::BuildOptions h3;
  h3.known_order = BigInt(40320);
  const auto s8 = mg::schreier_sims(ts3, 42, h3);
  CHECK(s8.order() == 40320);

  // A transvection whose vector lies in the 35-orbit is not in the embedded
  // S_8 (its transvections are exactly the 28 transpositions).
  const auto e1_orbit = mg::orbit(ts3, {1, 0, 0, 0, 0, 0});
  const std::set<std::uint64_t> in28(e1_orbit.points.begin(), e1_orbit.points.end());
  const MatMod probe = MatMod::identity(6, 2);
  std::vector<std::uint32_t> outside;
  for (std::uint32_t mask = 1; mask < 64 && outside.empty(); ++mask) {
    std::vector<std::uint32_t> v(6);
    for (int b = 0; b < 6; ++b) v[b] = (mask >> b) & 1;
    if (!in28.count(probe.encode_vector(v))) outside = v;
  }
  REQUIRE(!outside.empty());
  const MatMod tv = mg::symplectic_transvection(3, 2, outside, 1);
  CHECK_FALSE(s8.contains(tv));
  CHECK_FALSE(mg::schreier_sims(ts3, 42, h3).sift(tv).first.is_identity());
}

TEST_CASE("symplectic transvections: multiplier 1, inverse, order") {
  for (int g : {2, 3}) {
    for (std::uint32_t m : {2u, 4u, 8u, 5u}) {
      const auto form = symplectic::SympForm::adjacent_pairs(g, m);
      const std::vector<std::uint32_t> v = [&] {
        std::vector<std::uint32_t> w(2 * g, 0);
        w[0] = 1;
        w[2] = 1;
        return w;
      }();
      for (std::int64_t lambda : {1, 2, -1}) {
        const auto t = mg::symplectic_transvection(g, m, v, lambda);
        CHECK(symplectic::multiplier(t, form) == 1u);
        // T_{v,a} T_{v,b} = T_{v,a+b}; in particular T_{v,1} T_{v,-1} = id.
        CHECK(mg::symplectic_transvection(g, m, v, lambda) *
                  mg::symplectic_transvection(g, m, v, -lambda) ==
              MatMod::identity(2 * g, m));
      }
    }
  }
}

TEST_CASE("weight-<=2 transvections generate the full symplectic group") {
  struct Row {
    int g, k;
    const char* order;
  };
  // Orders match the layer formula |Sp_2g(F_2)| * 2^{(k-1)(2g^2+g)}.
  for (const Row& r : {Row{2, 1, "720"}, Row{2, 2, "737280"}, Row{2, 3, "754974720"},
                       Row{3, 1, "1451520"}}) {
    const auto gens = mg::symplectic_group_generators(r.g, r.k);
    mg::BuildOptions opts;
    opts.known_order = symplectic::group_order(r.g, r.k);
    const auto chain = mg::schreier_sims(gens, 0, opts);
    CHECK(chain.order() == parse_bigint(r.order));
    CHECK(chain.order() == symplectic::group_order(r.g, r.k));
  }
}

TEST_CASE("builtin preimage generators: counts and per-level orders (g = 2)") {
  // 2g+1 transvection lifts plus 2g^2+g kernel transvections.
  for (int g : {2, 3}) {
    const auto gens = mg::builtin_preimage_generators(g, 3);
    CHECK(gens.size() == static_cast<std::size_t>((2 * g + 1) + (2 * g * g + g)));
    for (const auto& M : gens) CHECK(M.modulus() == 8);
  }
  struct Row {
    int k;
    const char* order;
  };
  for (const Row& r : {Row{1, "720"}, Row{2, "737280"}, Row{3, "754974720"}}) {
    const auto gens = mg::builtin_preimage_generators(2, r.k);
    mg::BuildOptions opts;
    opts.known_order = parse_bigint(r.order);
    CHECK(mg::schreier_sims(gens, 0, opts).order() == parse_bigint(r.order));
  }
  // Mod 2 the builtin set generates exactly the embedded S_{2g+2}.
  std::vector<MatMod> mod2;
  for (const auto& M : mg::builtin_preimage_generators(3, 3)) mod2.push_back(M.reduced(2));
  mg::BuildOptions opts;
  opts.known_order = BigInt(40320);
  CHECK(mg::schreier_sims(mod2, 0, opts).order() == 40320);
}

TEST_CASE("verify_preimage_generation: full report for g = 2, k = 2") {
  const auto rep = mg::verify_preimage_generation(2, 2, mg::builtin_preimage_generators(2, 2), 0);
  CHECK(rep.pass);
  CHECK(rep.g == 2);
  CHECK(rep.k == 2);
  CHECK(rep.mod2_order == 720);
  CHECK(rep.group_order == 737280);
  CHECK(rep.target_order == 737280);
  REQUIRE(rep.checks.size() >= 3);
  for (const auto& c : rep.checks) CHECK(c.pass);

  // force_sweep gives the same verdict through the long verification path.
  const auto swept =
      mg::verify_preimage_generation(2, 2, mg::builtin_preimage_generators(2, 2), 0, true);
  CHECK(swept.pass);
  CHECK(swept.group_order == rep.group_order);

  // No fake passes. A single transvection lift generates a cyclic group whose
  // mod-2 image is nowhere near S_6: check (ii) must fail.
  const auto lone = mg::verify_preimage_generation(
      2, 2, {mg::builtin_preimage_generators(2, 2).front()}, 0);
  CHECK_FALSE(lone.pass);

  // A generator with multiplier 3 is outside the multiplier-1 group:
  // check (i) must fail.
  auto gens = mg::builtin_preimage_generators(2, 2);
  MatMod off = MatMod::identity(4, 4);
  off.set(1, 1, 3);
  off.set(3, 3, 3);
  gens.push_back(off);
  const auto wrong_mult = mg::verify_preimage_generation(2, 2, gens, 0);
  CHECK_FALSE(wrong_mult.pass);
}

TEST_CASE("augmenting the builtin set with redundant members changes nothing") {
  auto gens = mg::builtin_preimage_generators(2, 2);
  // A product of two members and a conjugate are already inside the group.
  gens.push_back(gens[0] * gens[1]);
  gens.push_back(gens[2] * gens[0] * gens[2].inverse());
  const auto rep = mg::verify_preimage_generation(2, 2, gens, 0);
  CHECK(rep.pass);
  CHECK(rep.group_order == 737280);
}

TEST_CASE("load_generator_file: bundled pair and malformed inputs") {
  const auto gens = mg::load_generator_file("data/preimage_gens_g3.json");
  REQUIRE(gens.size() == 2);
  for (const auto& M : gens) {
    CHECK(M.dim() == 6);
    CHECK(M.modulus() == 8);
  }
  // Entry spot checks against the declared row-major matrices.
  CHECK(gens[0].at(1, 0) == 1);  // e = id + E_{21} (1-indexed): unipotent
  CHECK(gens[0].at(0, 0) == 1);
  CHECK(gens[1].at(0, 1) == 1);
  CHECK(gens[1].at(5, 4) == 0);

  // Both are multiplier-1 symplectic mod 8 for the adjacent-pairs form.
  const auto form = symplectic::SympForm::adjacent_pairs(3, 8);
  for (const auto& M : gens) CHECK(symplectic::multiplier(M, form) == 1u);

  {
    std::ofstream bad("bad_gens_test.json");
    bad << "{\"g\": 3, \"modulus\": 8, \"matrices\": [[1, 2, 3]]}";
  }
  CHECK_THROWS_AS(mg::load_generator_file("bad_gens_test.json"), std::invalid_argument);
  CHECK_THROWS_AS(mg::load_generator_file("no_such_file.json"), std::invalid_argument);
}

TEST_CASE("preimage falsifier records its trials") {
  const auto res = mg::preimage_falsifier(2, 2, 3, 1234, mg::builtin_preimage_generators(2, 2));
  CHECK(res.trials == 3);
  CHECK(res.full_order_hits >= 0);
  CHECK(res.full_order_hits <= 3);
  CHECK(!res.notes.empty());
}
