#include "galmax/curve.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <nlohmann/json.hpp>

#include "galmax/arith.hpp"
#include "galmax/fq.hpp"

namespace galmax::curve {

namespace {

std::uint64_t checked_power(std::uint64_t p, int d, std::uint64_t cap) {
  std::uint64_t q = 1;
  for (int i = 0; i < d; ++i) {
    if (q > cap / p)
      throw std::invalid_argument("count_points: p^d exceeds the enumeration cap");
    q *= p;
  }
  return q;
}

/// Affine point total over F_p (d = 1): squares table + Horner.
std::int64_t affine_count_prime(const std::vector<std::uint64_t>& coef, std::uint64_t p,
                                int workers, std::vector<bool>& squares_out) {
  std::vector<bool> sq(p, false);
  for (std::uint64_t y = 0; y < p; ++y) sq[y * y % p] = true;
  const int w = std::max(1, workers);
  std::vector<std::int64_t> partial(static_cast<std::size_t>(w), 0);
  auto work = [&](int slot, std::uint64_t lo, std::uint64_t hi) {
    std::int64_t acc = 0;
    for (std::uint64_t x = lo; x < hi; ++x) {
      std::uint64_t v = 0;
      for (std::size_t i = coef.size(); i-- > 0;) v = (v * x + coef[i]) % p;
      acc += v == 0 ? 1 : (sq[v] ? 2 : 0);
    }
    partial[static_cast<std::size_t>(slot)] = acc;
  };
  if (w == 1) {
    work(0, 0, p);
  } else {
    std::vector<std::thread> pool;
    const std::uint64_t chunk = (p + static_cast<std::uint64_t>(w) - 1) / w;
    for (int i = 0; i < w; ++i)
      pool.emplace_back(work, i, std::min(p, chunk * i), std::min(p, chunk * (i + 1)));
    for (std::thread& t : pool) t.join();
  }
  std::int64_t total = 0;
  for (const std::int64_t s : partial) total += s;
  squares_out = std::move(sq);
  return total;
}

/// Affine point total over F_{p^d}, d > 1: generic field arithmetic.
std::int64_t affine_count_ext(const fq::Fq& field, const std::vector<fq::Fq::Elt>& coef,
                              int workers) {
  const std::uint64_t q = field.q();
  std::vector<bool> sq(q, false);
  for (std::uint64_t yi = 0; yi < q; ++yi) {
    const fq::Fq::Elt y = field.from_index(yi);
    sq[field.index(field.mul(y, y))] = true;
  }
  const int w = std::max(1, workers);
  std::vector<std::int64_t> partial(static_cast<std::size_t>(w), 0);
  auto work = [&](int slot, std::uint64_t lo, std::uint64_t hi) {
    std::int64_t acc = 0;
    for (std::uint64_t xi = lo; xi < hi; ++xi) {
      const fq::Fq::Elt x = field.from_index(xi);
      fq::Fq::Elt v = field.zero();
      for (std::size_t i = coef.size(); i-- > 0;) v = field.add(field.mul(v, x), coef[i]);
      acc += field.is_zero(v) ? 1 : (sq[field.index(v)] ? 2 : 0);
    }
    partial[static_cast<std::size_t>(slot)] = acc;
  };
  if (w == 1) {
    work(0, 0, q);
  } else {
    std::vector<std::thread> pool;
    const std::uint64_t chunk = (q + static_cast<std::uint64_t>(w) - 1) / w;
    for (int i = 0; i < w; ++i)
      pool.emplace_back(work, i, std::min(q, chunk * i), std::min(q, chunk * (i + 1)));
    for (std::thread& t : pool) t.join();
  }
  std::int64_t total = 0;
  for (const std::int64_t s : partial) total += s;
  return total;
}

}  // namespace

void CurveSpec::validate() const {
  if (g < 1) throw std::invalid_argument("curve: genus must be >= 1");
  if (degree(f) != 2 * g + 2)
    throw std::invalid_argument("curve: deg f must be exactly 2g+2 = " +
                                std::to_string(2 * g + 2));
  if (poly_discriminant(f) == 0)
    throw std::invalid_argument("curve: f has a multiple root (disc f = 0)");
}

CurveSpec curve_from_json_text(const std::string& text) {
  const nlohmann::json j = nlohmann::json::parse(text);
  CurveSpec c;
  c.g = j.at("genus").get<int>();
  c.label = j.value("label", std::string{});
  for (const nlohmann::json& coeff : j.at("coefficients")) {
    if (coeff.is_string())
      c.f.push_back(parse_bigint(coeff.get<std::string>()));
    else
      c.f.push_back(BigInt(coeff.get<long>()));
  }
  normalize(c.f);
  c.validate();
  return c;
}

CurveSpec load_curve(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open curve file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return curve_from_json_text(buf.str());
}

bool good_reduction(const CurveSpec& c, std::uint64_t p) {
  if (p < 2 || !arith::is_prime_u64(p)) throw std::invalid_argument("good_reduction: p not prime");
  if (p == 2) return false;
  return mod_floor(poly_discriminant(c.f), BigInt(static_cast<unsigned long>(p))) != 0;
}

BigInt count_points(const CurveSpec& c, std::uint64_t p, int d, const CountOptions& opts) {
  c.validate();
  if (p == 2) throw std::domain_error("count_points: p = 2 excluded (char-2 model)");
  if (!good_reduction(c, p)) throw std::domain_error("count_points: bad reduction at p");
  if (d < 1 || d > c.g)
    throw std::invalid_argument("count_points: d must be in 1..g");
  checked_power(p, d, opts.cap);  // enforce the enumeration cap
  const BigInt pz(static_cast<unsigned long>(p));
  if (mod_floor(lc(c.f), pz) == 0)
    throw std::domain_error("count_points: leading coefficient vanishes mod p");

  std::int64_t affine = 0;
  bool lc_square = false;
  if (d == 1) {
    std::vector<std::uint64_t> coef;
    coef.reserve(c.f.size());
    for (const BigInt& a : c.f)
      coef.push_back(mpz_fdiv_ui(a.get_mpz_t(), static_cast<unsigned long>(p)));
    std::vector<bool> sq;
    affine = affine_count_prime(coef, p, opts.workers, sq);
    lc_square = sq[coef.back()];
  } else {
    const fq::Fq field(p, d, opts.field_seed);
    std::vector<fq::Fq::Elt> coef;
    coef.reserve(c.f.size());
    for (const BigInt& a : c.f) coef.push_back(field.from_integer(a));
    affine = affine_count_ext(field, coef, opts.workers);
    lc_square = field.is_square(coef.back());
  }
  // `affine` already totals #{y : y^2 = f(x)} over every x in F_q (that is,
  // 1 + chi(f(x)) per x); only the points at infinity remain. The smooth
  // model has two of them exactly when lc(f) is a square in F_q.
  return BigInt(static_cast<long>(affine)) + (lc_square ? 2 : 0);
}

FrobeniusData frobenius_data(const CurveSpec& c, std::uint64_t p, const CountOptions& opts) {
  FrobeniusData out;
  out.p = p;
  const int g = c.g;
  const BigInt pz(static_cast<unsigned long>(p));

  BigInt pd = 1;
  for (int d = 1; d <= g; ++d) {
    pd *= pz;
    const BigInt n = count_points(c, p, d, opts);
    out.counts.push_back(n);
    const BigInt s = pd + 1 - n;
    // Weil: |s_d| <= 2g p^{d/2}, checked exactly as s_d^2 <= 4g^2 p^d.
    if (s * s > BigInt(4 * g * g) * pd)
      throw std::logic_error("frobenius_data: Weil bound violated at d = " + std::to_string(d) +
                             " (counting bug)");
    out.power_sums.push_back(s);
  }

  // Newton's identities: d e_d = sum_{i=1..d} (-1)^{i-1} e_{d-i} s_i.
  std::vector<BigInt> e(static_cast<std::size_t>(g) + 1);
  e[0] = 1;
  for (int d = 1; d <= g; ++d) {
    BigInt sum = 0;
    for (int i = 1; i <= d; ++i) {
      const BigInt term = e[static_cast<std::size_t>(d - i)] * out.power_sums[static_cast<std::size_t>(i - 1)];
      sum += (i % 2 == 1) ? term : BigInt(-term);
    }
    BigInt quot, rem;
    mpz_tdiv_qr(quot.get_mpz_t(), rem.get_mpz_t(), sum.get_mpz_t(), BigInt(d).get_mpz_t());
    if (rem != 0)
      throw std::logic_error("frobenius_data: Newton identity division not exact (counting bug)");
    e[static_cast<std::size_t>(d)] = quot;
  }

  // ch(T) = sum c_i T^{2g-i}: c_i = (-1)^i e_i for i <= g, then the
  // functional equation c_{g+i} = p^i c_{g-i}.
  std::vector<BigInt> cc(static_cast<std::size_t>(2 * g) + 1);
  for (int i = 0; i <= g; ++i) cc[static_cast<std::size_t>(i)] = (i % 2 == 0) ? e[static_cast<std::size_t>(i)] : BigInt(-e[static_cast<std::size_t>(i)]);
  BigInt ppow = 1;
  for (int i = 1; i <= g; ++i) {
    ppow *= pz;
    cc[static_cast<std::size_t>(g + i)] = ppow * cc[static_cast<std::size_t>(g - i)];
  }
  out.charpoly.assign(static_cast<std::size_t>(2 * g) + 1, BigInt(0));
  for (int i = 0; i <= 2 * g; ++i) out.charpoly[static_cast<std::size_t>(2 * g - i)] = cc[static_cast<std::size_t>(i)];
  out.trace = out.power_sums[0];

  if (poly_eval(out.charpoly, 1) <= 0)
    throw std::logic_error("frobenius_data: charpoly(1) = #J(F_p) must be positive (counting bug)");
  return out;
}

PolyZ frobenius_charpoly(const CurveSpec& c, std::uint64_t p, const CountOptions& opts) {
  return frobenius_data(c, p, opts).charpoly;
}

std::string charpoly_to_string(const PolyZ& ch) {
  if (ch.empty()) return "0";
  std::string out;
  for (int i = degree(ch); i >= 0; --i) {
    const BigInt& a = ch[static_cast<std::size_t>(i)];
    if (a == 0) continue;
    const bool negative = a < 0;
    const BigInt mag = negative ? BigInt(-a) : a;
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    const bool unit = mag == 1 && i > 0;
    if (!unit) out += to_decimal(mag);
    if (i >= 2)
      out += "T^" + std::to_string(i);
    else if (i == 1)
      out += "T";
  }
  return out.empty() ? "0" : out;
}

}  // namespace galmax::curve
