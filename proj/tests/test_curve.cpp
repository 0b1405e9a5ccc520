#include "doctest.h"

#include <stdexcept>

#include "galmax/bigint.hpp"
#include "galmax/curve.hpp"
#include "galmax/fq.hpp"

using namespace galmax;
namespace cv = galmax::curve;

namespace {

PolyZ ascending(std::initializer_list<long> descending) {
  PolyZ f;
  for (auto it = std::rbegin(descending); it != std::rend(descending); ++it)
    f.emplace_back(*it);
  return f;
}

}  // namespace

TEST_CASE("finite fields F_{p^d}: structure and quadratic character") {
  for (const auto& [p, d] : {std::pair<std::uint64_t, int>{5, 1}, {5, 2}, {7, 3}}) {
    const fq::Fq F(p, d, 2024);
    CHECK(F.q() == [&] {
      std::uint64_t q = 1;
      for (int i = 0; i < d; ++i) q *= p;
      return q;
    }());
    // Index round trip and field axioms on a few elements.
    for (std::uint64_t idx : {std::uint64_t{0}, std::uint64_t{1}, F.q() - 1}) {
      CHECK(F.index(F.from_index(idx)) == idx);
    }
    const auto a = F.from_index(F.q() - 1);
    const auto b = F.from_index(1 % F.q());
    CHECK(F.index(F.add(a, F.neg(a))) == 0);
    CHECK(F.index(F.mul(a, b)) == F.index(a));  // b = 1
    // Fermat: a^q = a.
    CHECK(F.index(F.pow(a, BigInt(static_cast<unsigned long>(F.q())))) == F.index(a));
    // Exactly (q-1)/2 nonzero squares, and 0 counts as a square.
    std::uint64_t squares = 0;
    for (std::uint64_t idx = 1; idx < F.q(); ++idx)
      if (F.is_square(F.from_index(idx))) ++squares;
    CHECK(squares == (F.q() - 1) / 2);
    CHECK(F.is_square(F.zero()));
  }
}

TEST_CASE("curve loading and validation") {
  const auto c2 = cv::load_curve("data/c2.json");
  CHECK(c2.g == 2);
  CHECK(c2.label == "c2");
  CHECK(degree(c2.f) == 6);
  CHECK(lc(c2.f) == 1);
  CHECK(c2.f[0] == 9508695);
  CHECK_NOTHROW(c2.validate());

  const auto c3 = cv::load_curve("data/c3.json");
  CHECK(c3.g == 3);
  CHECK(degree(c3.f) == 8);
  CHECK(c3.f[7] == parse_bigint("10781051650"));
  CHECK_NOTHROW(c3.validate());

  // Degree/genus mismatch rejected.
  CHECK_THROWS_AS(
      cv::curve_from_json_text(R"({"label":"x","genus":2,"coefficients":["1","0","1"]})"),
      std::invalid_argument);
  // Non-squarefree f rejected: (x^3+x)^2 = x^6 + 2x^4 + x^2 has disc 0.
  CHECK_THROWS_AS(cv::curve_from_json_text(
                      R"({"label":"x","genus":2,"coefficients":["0","0","1","0","2","0","1"]})"),
                  std::invalid_argument);
}

TEST_CASE("good reduction") {
  const auto c2 = cv::load_curve("data/c2.json");
  CHECK_FALSE(cv::good_reduction(c2, 2));    // p = 2 is never good here
  CHECK_FALSE(cv::good_reduction(c2, 3));    // 3 | disc
  CHECK_FALSE(cv::good_reduction(c2, 7));    // 7 | disc
  CHECK(cv::good_reduction(c2, 13));
  CHECK(cv::good_reduction(c2, 401));
  const auto c3 = cv::load_curve("data/c3.json");
  CHECK_FALSE(cv::good_reduction(c3, 19));   // 19 | disc
  CHECK(cv::good_reduction(c3, 101));
}

TEST_CASE("point counts over prime fields and extensions") {
  const auto c2 = cv::load_curve("data/c2.json");
  CHECK(cv::count_points(c2, 401, 1) == 353);
  CHECK(cv::count_points(c2, 401, 2) == 160915);
  CHECK(cv::count_points(c2, 61, 1) == 68);
  CHECK(cv::count_points(c2, 61, 2) == 3794);
  CHECK(cv::count_points(c2, 277, 1) == 309);
  CHECK(cv::count_points(c2, 277, 2) == 77299);

  const auto c3 = cv::load_curve("data/c3.json");
  CHECK(cv::count_points(c3, 101, 1) == 112);
  CHECK(cv::count_points(c3, 101, 2) == 10222);
  CHECK(cv::count_points(c3, 89, 1) == 87);
  CHECK(cv::count_points(c3, 89, 2) == 8099);
  CHECK(cv::count_points(c3, 103, 1) == 97);
  CHECK(cv::count_points(c3, 103, 2) == 10671);

  // Counts are independent of the modulus-polynomial representation.
  cv::CountOptions alt;
  alt.field_seed = 999;
  CHECK(cv::count_points(c2, 61, 2, alt) == 3794);
  CHECK(cv::count_points(c3, 89, 2, alt) == 8099);

  // Worker-count invariance.
  cv::CountOptions two;
  two.workers = 2;
  CHECK(cv::count_points(c2, 401, 2, two) == 160915);

  // Input guards.
  CHECK_THROWS_AS(cv::count_points(c2, 2, 1), std::domain_error);    // p = 2
  CHECK_THROWS_AS(cv::count_points(c2, 3, 1), std::domain_error);    // bad reduction
  CHECK_THROWS_AS(cv::count_points(c2, 13, 0), std::invalid_argument);
  CHECK_THROWS_AS(cv::count_points(c2, 13, 3), std::invalid_argument);  // d > g
  cv::CountOptions tiny;
  tiny.cap = 100;
  CHECK_THROWS_AS(cv::count_points(c2, 61, 2, tiny), std::invalid_argument);
}

TEST_CASE("Frobenius characteristic polynomials at the verification primes") {
  const auto c2 = cv::load_curve("data/c2.json");
  const auto c3 = cv::load_curve("data/c3.json");

  const auto f401 = cv::frobenius_data(c2, 401);
  CHECK(f401.charpoly == ascending({1, -49, 1257, -19649, 160801}));
  CHECK(f401.trace == 49);
  CHECK(f401.counts.size() == 2);
  CHECK(f401.power_sums[0] == 49);

  CHECK(cv::frobenius_data(c2, 61).charpoly == ascending({1, 6, 54, 366, 3721}));
  CHECK(cv::frobenius_data(c2, 277).charpoly == ascending({1, 31, 765, 8587, 76729}));

  CHECK(cv::frobenius_data(c3, 101).charpoly ==
        ascending({1, 10, 60, 222, 6060, 102010, 1030301}));
  CHECK(cv::frobenius_data(c3, 89).charpoly ==
        ascending({1, -3, 93, 40, 8277, -23763, 704969}));
  CHECK(cv::frobenius_data(c3, 103).charpoly ==
        ascending({1, -7, 55, -191, 5665, -74263, 1092727}));

  // The functional equation a_{2g-i} = p^{g-i} a_i, spot-checked at p = 401:
  // a_0 = p^2 = 160801, a_1 = p * a_3-coefficient pair (-19649 = 401 * -49).
  CHECK(f401.charpoly[0] == 401 * 401);
  CHECK(f401.charpoly[1] == 401 * f401.charpoly[3]);

  // #J(F_p) = charpoly(1) > 0.
  CHECK(poly_eval(f401.charpoly, BigInt(1)) > 0);

  // Rendering.
  CHECK(cv::charpoly_to_string(f401.charpoly) ==
        "T^4 - 49T^3 + 1257T^2 - 19649T + 160801");
}
