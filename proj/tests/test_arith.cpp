#include "doctest.h"

#include <algorithm>
#include <stdexcept>

#include "galmax/arith.hpp"
#include "galmax/bigint.hpp"
#include "galmax/poly.hpp"
#include "galmax/sha256.hpp"

using namespace galmax;

TEST_CASE("bigint parsing, rendering, and modular helpers") {
  CHECK(to_decimal(parse_bigint("103434941173345262214445927")) ==
        "103434941173345262214445927");
  CHECK(to_decimal(parse_bigint("-42")) == "-42");
  CHECK_THROWS_AS(parse_bigint("12x3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_bigint(""), std::invalid_argument);

  CHECK(mod_floor(BigInt(-7), BigInt(5)) == 3);
  CHECK(mod_floor(BigInt(7), BigInt(5)) == 2);
  CHECK(pow_ui(BigInt(2), 44) == parse_bigint("17592186044416"));
  CHECK(powmod(BigInt(3), BigInt(100), BigInt(101)) == 1);  // Fermat
  CHECK(invmod(BigInt(17), BigInt(64)) * 17 % 64 == 1);
  CHECK_THROWS_AS(invmod(BigInt(6), BigInt(64)), std::domain_error);

  CHECK(valuation(BigInt(1430), BigInt(13)) == 1);
  CHECK(valuation(pow_ui(BigInt(7), 8) * 9, BigInt(7)) == 8);
  CHECK_THROWS(valuation(BigInt(0), BigInt(7)));
}

TEST_CASE("primality: deterministic range, BPSW range, classic pitfalls") {
  using arith::Primality;
  CHECK(arith::is_prime_u64(2));
  CHECK(arith::is_prime_u64(421));
  CHECK(arith::is_prime_u64(6397));
  CHECK(arith::is_prime_u64(71347));
  CHECK_FALSE(arith::is_prime_u64(1));
  CHECK_FALSE(arith::is_prime_u64(561));    // Carmichael
  CHECK_FALSE(arith::is_prime_u64(341));    // 2-pseudoprime
  CHECK_FALSE(arith::is_prime_u64(25326001));  // strong pseudoprime to 2,3,5

  CHECK(arith::is_prime(parse_bigint("249200273817326443")) == Primality::prime);
  // Beyond the deterministic bound the verdict is flagged as probabilistic.
  CHECK(arith::is_prime(parse_bigint("103434941173345262214445927")) ==
        Primality::probable_prime);
  CHECK(arith::is_prime(parse_bigint("4899652830439610728976665849")) ==
        Primality::probable_prime);
  CHECK(arith::is_prime(parse_bigint("3700557180228322572272219236151")) ==
        Primality::probable_prime);
  CHECK(arith::is_prime(parse_bigint("103434941173345262214445927") * 3) ==
        Primality::composite);
}

TEST_CASE("polynomial exact arithmetic: shift, resultant, discriminant") {
  // (x-1)(x-2)(x-3) = x^3 - 6x^2 + 11x - 6; disc = prod (r_i - r_j)^2 = 4.
  const PolyZ f{-6, 11, -6, 1};
  CHECK(poly_discriminant(f) == 4);

  // Quadratic: disc(x^2 + bx + c) = b^2 - 4c.
  CHECK(poly_discriminant(PolyZ{7, 5, 1}) == 25 - 28);

  // Taylor shift is exact and invertible.
  const PolyZ g{3, -2, 0, 1, 9};
  CHECK(taylor_shift(taylor_shift(g, BigInt(11)), BigInt(-11)) == g);
  CHECK(poly_eval(taylor_shift(g, BigInt(4)), BigInt(1)) == poly_eval(g, BigInt(5)));

  // resultant(f, g) = lc(g)^deg f * prod f(roots of g) on a known pair:
  // res(x^2 - 1, x - 2) = (2)^2 - 1 = 3.
  CHECK(resultant(PolyZ{-1, 0, 1}, PolyZ{-2, 1}) == 3);
}

TEST_CASE("modular polynomial arithmetic") {
  const BigInt m(27);
  const PolyZ a{25, 3, 1};
  const PolyZ b{2, 1};
  const auto [qq, rr] = mod_divrem(a, b, m);
  CHECK(mod_add(mod_mul(qq, b, m), rr, m) == mod_reduce(a, m));
  CHECK(degree(rr) < degree(b));

  // gcd over F_7: gcd((x-1)(x-2), (x-1)(x-3)) = x - 1, monic.
  const BigInt p(7);
  const PolyZ u = mod_mul(PolyZ{6, 1}, PolyZ{5, 1}, p);
  const PolyZ v = mod_mul(PolyZ{6, 1}, PolyZ{4, 1}, p);
  CHECK(mod_gcd(u, v, p) == PolyZ{6, 1});

  // x^q = x in F_q[x]/(f) for irreducible f (Fermat for the field F_{p^d}).
  const PolyZ f = arith::find_irreducible(5, 3, 7);
  const PolyZ xq = mod_powmod(PolyZ{0, 1}, pow_ui(BigInt(5), 3), f, BigInt(5));
  CHECK(xq == PolyZ{0, 1});
}

TEST_CASE("factor_mod_p: exactness, sorting, multiplicities") {
  // x^6 - 1 splits into distinct linears mod 7.
  const PolyZ f{-1, 0, 0, 0, 0, 0, 1};
  const auto fac = arith::factor_mod_p(f, BigInt(7), 123);
  CHECK(fac.size() == 6);
  for (const auto& fp : fac) {
    CHECK(degree(fp.factor) == 1);
    CHECK(fp.multiplicity == 1);
  }
  // Sorted by (degree, lex): roots come out in a fixed order independent of seed.
  const auto fac2 = arith::factor_mod_p(f, BigInt(7), 999);
  REQUIRE(fac2.size() == fac.size());
  for (std::size_t i = 0; i < fac.size(); ++i) CHECK(fac[i].factor == fac2[i].factor);

  // Characteristic-p descent: x^4 + 1 = (x+1)^4 mod 2.
  const auto sq = arith::factor_mod_p(PolyZ{1, 0, 0, 0, 1}, BigInt(2), 5);
  REQUIRE(sq.size() == 1);
  CHECK(sq[0].factor == PolyZ{1, 1});
  CHECK(sq[0].multiplicity == 4);

  // x^9 - x mod 3 = product of every monic irreducible of degree dividing 2:
  // three linears and three quadratics, all multiplicity 1.
  const PolyZ g{0, -1, 0, 0, 0, 0, 0, 0, 0, 1};
  const auto fg = arith::factor_mod_p(g, BigInt(3), 2024);
  int lin = 0, quad = 0;
  PolyZ prod{1};
  for (const auto& fp : fg) {
    CHECK(fp.multiplicity == 1);
    if (degree(fp.factor) == 1) ++lin;
    if (degree(fp.factor) == 2) ++quad;
    prod = mod_mul(prod, fp.factor, BigInt(3));
  }
  CHECK(lin == 3);
  CHECK(quad == 3);
  CHECK(prod == mod_reduce(g, BigInt(3)));

  // Non-monic input: f = lc * prod factor^mult must hold.
  const PolyZ h{3, 1, 4, 1, 5};
  const auto fh = arith::factor_mod_p(h, BigInt(11), 77);
  PolyZ ph{1};
  for (const auto& fp : fh)
    for (int i = 0; i < fp.multiplicity; ++i) ph = mod_mul(ph, fp.factor, BigInt(11));
  CHECK(mod_scale(ph, lc(h), BigInt(11)) == mod_reduce(h, BigInt(11)));
}

TEST_CASE("factor_degrees_squarefree: DDF-only degrees and squarefree guard") {
  // x^6 - 1 mod 7: six linear factors.
  auto d = arith::factor_degrees_squarefree(PolyZ{-1, 0, 0, 0, 0, 0, 1}, BigInt(7));
  std::sort(d.begin(), d.end());
  CHECK(d == std::vector<int>{1, 1, 1, 1, 1, 1});

  // x^4 + 1 is irreducible mod no odd prime; mod 3 it splits 2+2.
  d = arith::factor_degrees_squarefree(PolyZ{1, 0, 0, 0, 1}, BigInt(3));
  std::sort(d.begin(), d.end());
  CHECK(d == std::vector<int>{2, 2});

  CHECK_THROWS_AS(arith::factor_degrees_squarefree(PolyZ{1, 2, 1}, BigInt(7)),
                  std::domain_error);  // (x+1)^2 is not squarefree
}

TEST_CASE("hensel_lift: postconditions at prime-power precision") {
  // f = x^2 - 7 ≡ (x-1)(x+1) mod 3; lift to 3^5.
  const PolyZ f{-7, 0, 1};
  const std::vector<PolyZ> start{PolyZ{2, 1}, PolyZ{1, 1}};
  const BigInt p(3);
  const unsigned long k = 5;
  const BigInt pk = pow_ui(p, k);
  const auto lifted = arith::hensel_lift(f, start, p, k);
  REQUIRE(lifted.size() == 2);
  PolyZ prod{1};
  for (std::size_t i = 0; i < lifted.size(); ++i) {
    CHECK(is_monic(lifted[i]));
    CHECK(mod_reduce(lifted[i], p) == mod_reduce(start[i], p));
    prod = mod_mul(prod, lifted[i], pk);
  }
  CHECK(prod == mod_reduce(f, pk));

  // A three-factor lift with a quadratic cofactor, to exercise the tree.
  const PolyZ g{-1, 0, 0, 0, 0, 0, 1};  // x^6 - 1
  const auto gfac = arith::factor_mod_p(g, BigInt(5), 4);
  std::vector<PolyZ> inputs;
  for (const auto& fp : gfac) inputs.push_back(fp.factor);
  const BigInt p5k = pow_ui(BigInt(5), 4);
  const auto glift = arith::hensel_lift(g, inputs, BigInt(5), 4);
  PolyZ gp{1};
  for (const auto& gl : glift) gp = mod_mul(gp, gl, p5k);
  CHECK(gp == mod_reduce(g, p5k));
}

TEST_CASE("multiplicative orders and primitive roots") {
  CHECK(arith::multiplicative_order(BigInt(2), 7) == 3);
  CHECK(arith::multiplicative_order(BigInt(3), 7) == 6);
  // The orders underpinning the primitive-root conditions for the two
  // verified curves:
  CHECK(arith::multiplicative_order(BigInt(17), 3) == 2);
  CHECK(arith::multiplicative_order(BigInt(17), 5) == 4);
  CHECK(arith::multiplicative_order(BigInt(7), 5) == 4);
  CHECK(arith::multiplicative_order(BigInt(17), 7) == 6);
  CHECK(arith::multiplicative_order(BigInt(19), 7) == 6);

  CHECK(arith::is_primitive_root(BigInt(17), 3));
  CHECK(arith::is_primitive_root(BigInt(17), 5));
  CHECK(arith::is_primitive_root(BigInt(17), 7));
  CHECK(arith::is_primitive_root(BigInt(7), 5));
  CHECK(arith::is_primitive_root(BigInt(19), 7));
  CHECK_FALSE(arith::is_primitive_root(BigInt(2), 7));
  CHECK_FALSE(arith::is_primitive_root(BigInt(1), 5));
}

TEST_CASE("find_irreducible is deterministic and actually irreducible") {
  for (const auto& [p, d] : {std::pair<std::uint64_t, int>{101, 2},
                             {101, 3},
                             {127, 3},
                             {89, 2}}) {
    const PolyZ f = arith::find_irreducible(p, d, 2024);
    CHECK(degree(f) == d);
    CHECK(is_monic(f));
    const auto fac = arith::factor_mod_p(f, BigInt(p), 1);
    REQUIRE(fac.size() == 1);
    CHECK(fac[0].multiplicity == 1);
    CHECK(arith::find_irreducible(p, d, 2024) == f);  // same seed, same answer
  }
}

TEST_CASE("sha256 known-answer vectors") {
  CHECK(sha256_hex("") ==
        "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  CHECK(sha256_hex("abc") ==
        "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}
