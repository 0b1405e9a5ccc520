#pragma once

/// Hyperelliptic curves y^2 = f(x) with deg f = 2g+2: point counting over
/// F_{p^d} by exhaustive enumeration and Frobenius characteristic polynomials
/// recovered from the counts via Newton's identities and the functional
/// equation, with Weil-bound validation at every step.

#include <cstdint>
#include <string>
#include <vector>

#include "galmax/bigint.hpp"
#include "galmax/poly.hpp"

namespace galmax::curve {

struct CurveSpec {
  int g = 0;
  PolyZ f;  // ascending coefficients; deg f = 2g+2
  std::string label;

  /// Throws std::invalid_argument unless deg f = 2g+2, g >= 1, and disc f != 0.
  void validate() const;
};

/// Reads {"genus": g, "coefficients": [a0, a1, ...], "label": "..."} where the
/// coefficients are lowest-first decimal strings (plain integers accepted).
CurveSpec load_curve(const std::string& path);
CurveSpec curve_from_json_text(const std::string& text);

struct CountOptions {
  int workers = 1;
  std::uint64_t cap = std::uint64_t(1) << 24;  // largest p^d enumerated
  /// Seed for the F_{p^d} modulus search. Counts are independent of the
  /// modulus representation; exposed so tests can demonstrate exactly that.
  std::uint64_t field_seed = 2024;
};

/// #C(F_{p^d}) for the smooth projective model:
///   sum over x in F_{p^d} of (1 + chi(f(x))) plus the points at infinity,
/// of which there are 2 exactly when lc(f) is a square in F_{p^d} (always, for
/// monic f). chi is the quadratic character with chi(0) = 0.
/// Throws std::domain_error for p = 2 or bad reduction, std::invalid_argument
/// for d outside 1..g or p^d beyond the enumeration cap.
BigInt count_points(const CurveSpec& c, std::uint64_t p, int d, const CountOptions& opts = {});

/// True iff p is odd and p does not divide disc f.
bool good_reduction(const CurveSpec& c, std::uint64_t p);

struct FrobeniusData {
  std::uint64_t p = 0;
  std::vector<BigInt> counts;      // N_1..N_g
  std::vector<BigInt> power_sums;  // s_d = p^d + 1 - N_d
  PolyZ charpoly;                  // ascending coefficients, degree 2g, monic
  BigInt trace;                    // s_1 = -(coefficient of T^{2g-1})
};

/// Counts over F_p..F_{p^g}, recovers e_1..e_g by Newton's identities, and
/// completes the characteristic polynomial of Frobenius by the functional
/// equation a_{2g-i} = p^{g-i} a_i. Validates the Weil bound s_d^2 <= 4g^2 p^d
/// for every power sum and charpoly(1) > 0 (= #J(F_p)); violations throw
/// std::logic_error since they can only come from a counting bug.
FrobeniusData frobenius_data(const CurveSpec& c, std::uint64_t p, const CountOptions& opts = {});
PolyZ frobenius_charpoly(const CurveSpec& c, std::uint64_t p, const CountOptions& opts = {});

/// Descending-power rendering, e.g. "T^4 - 49T^3 + 1257T^2 - 19649T + 160801".
std::string charpoly_to_string(const PolyZ& ch);

}  // namespace galmax::curve
