#include "galmax/matgrp.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "galmax/rng.hpp"
#include "galmax/symembed.hpp"
#include "galmax/symplectic.hpp"

namespace galmax::matgrp {

namespace {

constexpr std::uint64_t kDomainCap = std::uint64_t(1) << 21;

/// Little-endian mixed radix, matching MatMod::encode_vector.
std::uint64_t encode(const std::vector<std::uint32_t>& v, std::uint32_t m) {
  std::uint64_t code = 0;
  for (std::size_t i = v.size(); i-- > 0;) code = code * m + (v[i] % m);
  return code;
}

std::vector<std::uint32_t> decode(std::uint64_t code, std::uint32_t n, std::uint32_t m) {
  std::vector<std::uint32_t> v(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    v[i] = static_cast<std::uint32_t>(code % m);
    code /= m;
  }
  return v;
}

std::uint64_t act(const MatMod& s, std::uint64_t code) {
  return encode(s.apply(decode(code, s.dim(), s.modulus())), s.modulus());
}

/// m^n when it fits under the cap, 0 otherwise.
std::uint64_t domain_size(std::uint32_t n, std::uint32_t m) {
  std::uint64_t d = 1;
  for (std::uint32_t i = 0; i < n; ++i) {
    if (d > kDomainCap / m) return 0;
    d *= m;
  }
  return d;
}

BigInt factorial(unsigned long n) {
  BigInt f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

BigInt two_power(unsigned long e) {
  BigInt p = 1;
  mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), e);
  return p;
}

}  // namespace

Orbit orbit(const std::vector<MatMod>& gens, const std::vector<std::uint32_t>& v) {
  if (gens.empty()) throw std::invalid_argument("orbit: need at least one generator");
  const std::uint32_t n = gens[0].dim(), m = gens[0].modulus();
  for (const MatMod& s : gens)
    if (s.dim() != n || s.modulus() != m)
      throw std::invalid_argument("orbit: mixed dimensions or moduli");
  if (v.size() != n) throw std::invalid_argument("orbit: seed vector has wrong length");
  Orbit o;
  const std::uint64_t seed_code = encode(v, m);
  o.points.push_back(seed_code);
  o.transversal.emplace(seed_code, MatMod::identity(n, m));
  for (std::size_t idx = 0; idx < o.points.size(); ++idx) {
    const std::uint64_t u = o.points[idx];
    for (const MatMod& s : gens) {
      const std::uint64_t p = act(s, u);
      if (!o.transversal.contains(p)) {
        o.transversal.emplace(p, s * o.transversal.at(u));
        o.points.push_back(p);
      }
    }
  }
  return o;
}

MatMod StabChain::transversal(std::size_t level, std::uint64_t code) const {
  const Level& lv = levels_[level];
  MatMod t = MatMod::identity(n_, m_);
  for (std::uint64_t cur = code;;) {
    const Edge& e = lv.tree.at(cur);
    if (e.gen < 0) break;
    t = t * lv.gens[static_cast<std::size_t>(e.gen)];
    cur = e.parent;
  }
  return t;
}

MatMod StabChain::transversal_inv(std::size_t level, std::uint64_t code) const {
  const Level& lv = levels_[level];
  MatMod t = MatMod::identity(n_, m_);
  for (std::uint64_t cur = code;;) {
    const Edge& e = lv.tree.at(cur);
    if (e.gen < 0) break;
    t = lv.gen_invs[static_cast<std::size_t>(e.gen)] * t;
    cur = e.parent;
  }
  return t;
}

std::pair<MatMod, std::size_t> StabChain::sift_from(MatMod m, std::size_t start) const {
  for (std::size_t i = start; i < levels_.size(); ++i) {
    const std::uint64_t p = encode(m.apply(levels_[i].base_point), m_);
    if (!levels_[i].tree.contains(p)) return {std::move(m), i};
    m = transversal_inv(i, p) * m;
  }
  return {std::move(m), levels_.size()};
}

std::pair<MatMod, std::size_t> StabChain::sift(const MatMod& m) const {
  if (m.dim() != n_ || m.modulus() != m_)
    throw std::invalid_argument("sift: dimension or modulus mismatch");
  return sift_from(m, 0);
}

BigInt StabChain::order() const {
  if (!verified_) throw std::logic_error("order: stabilizer chain not verified");
  BigInt o = 1;
  for (const Level& lv : levels_) o *= static_cast<unsigned long>(lv.tree.size());
  return o;
}

bool StabChain::contains(const MatMod& m) const {
  if (!verified_) throw std::logic_error("contains: stabilizer chain not verified");
  if (m.dim() != n_ || m.modulus() != m_)
    throw std::invalid_argument("contains: dimension or modulus mismatch");
  return sift_from(m, 0).first.is_identity();
}

std::vector<std::vector<std::uint32_t>> StabChain::base() const {
  std::vector<std::vector<std::uint32_t>> b;
  b.reserve(levels_.size());
  for (const Level& lv : levels_) b.push_back(lv.base_point);
  return b;
}

std::vector<std::uint64_t> StabChain::orbit_sizes() const {
  std::vector<std::uint64_t> s;
  s.reserve(levels_.size());
  for (const Level& lv : levels_) s.push_back(lv.tree.size());
  return s;
}

class ChainBuilder {
 public:
  ChainBuilder(StabChain& c, const std::vector<MatMod>& gens, std::uint64_t seed,
               const BuildOptions& opts)
      : c_(c), opts_(opts), rng_(seed) {
    if (gens.empty()) throw std::invalid_argument("schreier_sims: empty generator list");
    c_.n_ = gens[0].dim();
    c_.m_ = gens[0].modulus();
    for (const MatMod& s : gens) {
      if (s.dim() != c_.n_ || s.modulus() != c_.m_)
        throw std::invalid_argument("schreier_sims: mixed dimensions or moduli");
      if (!s.is_identity()) orig_.push_back(s);
    }
  }

  void run() {
    for (const MatMod& s : orig_) add_element(s, 0);
    if (orig_.empty()) {
      c_.verified_ = true;  // the trivial group
      return;
    }
    // Randomized phase: product-replacement elements, sifted in until the
    // chain looks stable or the caller's order certificate is reached.
    std::vector<MatMod> pool;
    const std::size_t pool_size = std::max<std::size_t>(10, orig_.size() + 5);
    for (std::size_t i = 0; i < pool_size; ++i) pool.push_back(orig_[i % orig_.size()]);
    auto mix = [&]() -> const MatMod& {
      const std::size_t i = rng_.below(pool.size());
      std::size_t j = rng_.below(pool.size() - 1);
      if (j >= i) ++j;
      pool[i] = rng_.below(2) ? pool[i] * pool[j] : pool[j] * pool[i];
      return pool[i];
    };
    for (int step = 0; step < 50; ++step) mix();
    int quiet = 0;
    for (int step = 0; step < 20000 && quiet < 30; ++step) {
      if (order_certified()) {
        c_.verified_ = true;
        if (!opts_.force_schreier_sweep) return;
        break;
      }
      if (add_element(mix(), 0))
        quiet = 0;
      else
        ++quiet;
    }
    deterministic_sweep();
    c_.verified_ = true;
    if (opts_.known_order) order_certified();  // surfaces containment violations
  }

 private:
  bool order_certified() {
    if (!opts_.known_order) return false;
    BigInt o = 1;
    for (const StabChain::Level& lv : c_.levels_) o *= static_cast<unsigned long>(lv.tree.size());
    if (o > *opts_.known_order)
      throw std::logic_error(
          "schreier_sims: orbit-size product exceeds the claimed containing order; "
          "the known_order certificate is wrong");
    return o == *opts_.known_order;
  }

  /// Sifts m from `floor` and records a surviving residue as a strong
  /// generator at levels floor..strip (creating a new bottom level when the
  /// residue fixes every current base point). Returns true if the chain grew.
  bool add_element(const MatMod& m, std::size_t floor) {
    auto [res, lvl] = c_.sift_from(m, floor);
    if (res.is_identity()) return false;
    add_from(res, floor, lvl);
    return true;
  }

  void create_level(const MatMod& g, const MatMod& g_inv) {
    StabChain::Level lv;
    lv.base_point = greedy_base({g});
    lv.base_code = encode(lv.base_point, c_.m_);
    lv.gens.push_back(g);
    lv.gen_invs.push_back(g_inv);
    lv.tree.emplace(lv.base_code, StabChain::Edge{-1, 0});
    lv.discovery.push_back(lv.base_code);
    c_.levels_.push_back(std::move(lv));
    close_orbit(c_.levels_.back(), 0);
  }

  /// Extends the orbit after gens[new_gen_start..] were appended: rescans
  /// already-processed points with the new generators only, then continues
  /// plain BFS (all generators) over the newly discovered frontier.
  void close_orbit(StabChain::Level& lv, std::size_t new_gen_start) {
    auto try_edge = [&](std::uint64_t u, std::size_t gi) {
      const std::uint64_t p = act(lv.gens[gi], u);
      if (!lv.tree.contains(p)) {
        lv.tree.emplace(p, StabChain::Edge{static_cast<std::int32_t>(gi), u});
        lv.discovery.push_back(p);
      }
    };
    for (std::size_t idx = 0; idx < lv.processed; ++idx)
      for (std::size_t gi = new_gen_start; gi < lv.gens.size(); ++gi)
        try_edge(lv.discovery[idx], gi);
    while (lv.processed < lv.discovery.size()) {
      const std::uint64_t u = lv.discovery[lv.processed++];
      for (std::size_t gi = 0; gi < lv.gens.size(); ++gi) try_edge(u, gi);
    }
  }

  /// Greedy base choice: partition the whole domain into orbits under the
  /// given generators, take the largest orbit, and return its
  /// lexicographically least member (index 0 most significant). Falls back to
  /// the first moved point when the domain is too large to enumerate.
  std::vector<std::uint32_t> greedy_base(const std::vector<MatMod>& gens) {
    const std::uint64_t domain = domain_size(c_.n_, c_.m_);
    if (domain == 0) {
      for (std::uint64_t code = 0;; ++code) {
        for (const MatMod& s : gens)
          if (act(s, code) != code) return decode(code, c_.n_, c_.m_);
      }
    }
    std::vector<bool> visited(domain, false);
    std::uint64_t best_size = 1;
    std::vector<std::uint32_t> best_member;
    std::vector<std::uint64_t> stack;
    for (std::uint64_t start = 0; start < domain; ++start) {
      if (visited[start]) continue;
      visited[start] = true;
      stack.assign(1, start);
      std::uint64_t size = 0;
      std::vector<std::uint32_t> lex_min = decode(start, c_.n_, c_.m_);
      while (!stack.empty()) {
        const std::uint64_t u = stack.back();
        stack.pop_back();
        ++size;
        std::vector<std::uint32_t> du = decode(u, c_.n_, c_.m_);
        if (du < lex_min) lex_min = du;
        for (const MatMod& s : gens) {
          const std::uint64_t p = act(s, u);
          if (!visited[p]) {
            visited[p] = true;
            stack.push_back(p);
          }
        }
      }
      if (size > best_size || (size == best_size && !best_member.empty() && lex_min < best_member)) {
        best_size = size;
        best_member = std::move(lex_min);
      }
    }
    if (best_member.empty())
      throw std::logic_error("greedy_base: generators act trivially on the whole domain");
    return best_member;
  }

  /// Bottom-up deterministic verification: every Schreier generator of every
  /// level must sift to the identity through the levels below it. Failures
  /// are adjoined as strong generators and the sweep resumes at the deepest
  /// level whose data changed. On exit the chain is complete.
  void deterministic_sweep() {
    int i = static_cast<int>(c_.levels_.size()) - 1;
    while (i >= 0) {
      // NOTE: `clean` must be tested before touching `lv` again — add_from can
      // reallocate the level vector, leaving lv dangling once a residue lands.
      const StabChain::Level& lv = c_.levels_[static_cast<std::size_t>(i)];
      bool clean = true;
      for (std::size_t idx = 0; clean && idx < lv.discovery.size(); ++idx) {
        const std::uint64_t u = lv.discovery[idx];
        const MatMod t_u = c_.transversal(static_cast<std::size_t>(i), u);
        for (std::size_t gi = 0; clean && gi < lv.gens.size(); ++gi) {
          const std::uint64_t p = act(lv.gens[gi], u);
          const MatMod w =
              c_.transversal_inv(static_cast<std::size_t>(i), p) * lv.gens[gi] * t_u;
          if (w.is_identity()) continue;
          auto [res, lvl] = c_.sift_from(w, static_cast<std::size_t>(i) + 1);
          if (res.is_identity()) continue;
          add_from(res, static_cast<std::size_t>(i) + 1, lvl);
          i = static_cast<int>(
              std::min(lvl, c_.levels_.size() - 1));  // deepest level whose data changed
          clean = false;
        }
      }
      if (clean) --i;
    }
  }

  /// Records res (which fixes base points 0..strip-1) at levels floor..strip.
  void add_from(const MatMod& res, std::size_t floor, std::size_t strip) {
    if (std::find(c_.strong_.begin(), c_.strong_.end(), res) == c_.strong_.end())
      c_.strong_.push_back(res);
    const MatMod res_inv = res.inverse();
    const bool created = strip == c_.levels_.size();
    if (created) create_level(res, res_inv);
    const std::size_t last = created ? c_.levels_.size() - 2 : strip;
    for (std::size_t l = floor; l <= last && l < c_.levels_.size(); ++l) {
      StabChain::Level& lv = c_.levels_[l];
      lv.gens.push_back(res);
      lv.gen_invs.push_back(res_inv);
      close_orbit(lv, lv.gens.size() - 1);
    }
  }

  StabChain& c_;
  BuildOptions opts_;
  Rng rng_;
  std::vector<MatMod> orig_;
};

StabChain schreier_sims(const std::vector<MatMod>& gens, std::uint64_t seed,
                        const BuildOptions& opts) {
  StabChain chain;
  ChainBuilder(chain, gens, seed, opts).run();
  return chain;
}

MatMod symplectic_transvection(int g, std::uint32_t m, const std::vector<std::uint32_t>& v,
                               std::int64_t lambda) {
  const std::uint32_t n = 2 * static_cast<std::uint32_t>(g);
  if (v.size() != n) throw std::invalid_argument("transvection: vector length != 2g");
  // w = v^T Omega for the adjacent-pairs form.
  std::vector<std::int64_t> w(n, 0);
  for (int i = 0; i < g; ++i) {
    w[2 * i + 1] += v[2 * i];
    w[2 * i] -= v[2 * i + 1];
  }
  MatMod t = MatMod::identity(n, m);
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = 0; j < n; ++j)
      t.set(i, j, static_cast<std::int64_t>(t.at(i, j)) + lambda * v[i] * w[j]);
  return t;
}

namespace {

std::vector<std::vector<std::uint32_t>> weight_le2_vectors(std::uint32_t n) {
  std::vector<std::vector<std::uint32_t>> vs;
  for (std::uint32_t i = 0; i < n; ++i) {
    std::vector<std::uint32_t> v(n, 0);
    v[i] = 1;
    vs.push_back(v);
  }
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = i + 1; j < n; ++j) {
      std::vector<std::uint32_t> v(n, 0);
      v[i] = v[j] = 1;
      vs.push_back(v);
    }
  return vs;
}

}  // namespace

std::vector<MatMod> symplectic_group_generators(int g, int k) {
  if (g < 1 || k < 1 || k > 19) throw std::invalid_argument("symplectic_group_generators range");
  const std::uint32_t m = std::uint32_t(1) << k;
  std::vector<MatMod> gens;
  for (const auto& v : weight_le2_vectors(2 * static_cast<std::uint32_t>(g)))
    gens.push_back(symplectic_transvection(g, m, v, 1));
  return gens;
}

std::vector<MatMod> load_generator_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("generator file: cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(buf.str());
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument("generator file: invalid JSON: " + std::string(e.what()));
  }
  try {
    const int g = j.at("g").get<int>();
    const std::uint32_t m = j.at("modulus").get<std::uint32_t>();
    if (g < 1 || m < 2) throw std::invalid_argument("generator file: need g >= 1, modulus >= 2");
    const std::size_t n = static_cast<std::size_t>(2 * g);
    std::vector<MatMod> out;
    for (const auto& rows : j.at("matrices")) {
      if (!rows.is_array() || rows.size() != n * n) {
        throw std::invalid_argument("generator file: each matrix needs " +
                                    std::to_string(n * n) + " row-major entries");
      }
      MatMod mat(n, m);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t jj = 0; jj < n; ++jj) {
          mat.set(i, jj, rows[i * n + jj].get<std::int64_t>());
        }
      }
      out.push_back(std::move(mat));
    }
    if (out.empty()) throw std::invalid_argument("generator file: no matrices");
    return out;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument("generator file: " + std::string(e.what()));
  }
}

std::vector<MatMod> builtin_preimage_generators(int g, int k) {
  if (g < 1 || k < 1 || k > 19) throw std::invalid_argument("builtin_preimage_generators range");
  const std::uint32_t n = 2 * static_cast<std::uint32_t>(g);
  const std::uint32_t m = std::uint32_t(1) << k;
  auto basis_sum = [&](std::initializer_list<std::uint32_t> idxs) {
    std::vector<std::uint32_t> v(n, 0);
    for (std::uint32_t i : idxs) v[i] = 1;
    return v;
  };
  // Transvection vectors whose mod-2 transvections are exactly T_1..T_{2g+1}.
  std::vector<std::vector<std::uint32_t>> tvecs;
  for (int kk = 1; kk <= 2 * g + 1; ++kk) {
    if (kk == 1)
      tvecs.push_back(basis_sum({0}));
    else if (kk == 2 * g + 1)
      tvecs.push_back(basis_sum({n - 2}));
    else if (kk % 2 == 0)
      tvecs.push_back(basis_sum({static_cast<std::uint32_t>(kk) - 2,
                                 static_cast<std::uint32_t>(kk) - 1}));
    else
      tvecs.push_back(basis_sum({static_cast<std::uint32_t>(kk) - 3,
                                 static_cast<std::uint32_t>(kk) - 1}));
  }
  std::vector<MatMod> gens;
  for (int kk = 1; kk <= 2 * g + 1; ++kk) {
    MatMod t = symplectic_transvection(g, m, tvecs[static_cast<std::size_t>(kk - 1)], 1);
    if (!(t.reduced(2) == symembed::transposition_matrix(g, kk)))
      throw std::logic_error("builtin_preimage_generators: lift does not reduce to T_k");
    gens.push_back(std::move(t));
  }
  for (const auto& v : weight_le2_vectors(n)) gens.push_back(symplectic_transvection(g, m, v, -2));
  return gens;
}

PreimageReport verify_preimage_generation(int g, int k, const std::vector<MatMod>& gens,
                                          std::uint64_t seed, bool force_sweep) {
  if (g < 2 || g > 3 || k < 1 || k > 3)
    throw std::invalid_argument("verify_preimage_generation: g in {2,3} and k <= 3 required");
  if (gens.empty()) throw std::invalid_argument("verify_preimage_generation: no generators");
  PreimageReport rep;
  rep.g = g;
  rep.k = k;
  const std::uint32_t m = std::uint32_t(1) << k;
  const unsigned long letters = 2 * static_cast<unsigned long>(g) + 2;
  rep.target_order =
      factorial(letters) * two_power(static_cast<unsigned long>(k - 1) *
                                     (2 * static_cast<unsigned long>(g) * g + g));
  Rng rng(seed);

  // (i) multiplier 1 mod 2^k for every generator.
  {
    const symplectic::SympForm form = symplectic::SympForm::adjacent_pairs(g, m);
    bool pass = true;
    std::string detail;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      const std::optional<std::uint32_t> mult = symplectic::multiplier(gens[i], form);
      if (!mult || *mult != 1) {
        pass = false;
        detail = "generator " + std::to_string(i) + " is not symplectic with multiplier 1";
        break;
      }
    }
    rep.checks.push_back({"multiplier-1 symplectic mod 2^k", pass,
                          pass ? "all " + std::to_string(gens.size()) + " generators" : detail});
  }

  // (ii) mod-2 images lie in the embedded S_{2g+2} and generate it.
  {
    bool pass = rep.checks[0].pass;
    std::string detail = pass ? "" : "skipped: check (i) failed";
    if (pass) {
      const StabChain sym_chain = schreier_sims(symembed::transposition_generators(g),
                                                rng.next(), {factorial(letters), false});
      std::vector<MatMod> images;
      for (std::size_t i = 0; i < gens.size() && pass; ++i) {
        images.push_back(gens[i].reduced(2));
        if (!sym_chain.contains(images.back())) {
          pass = false;
          detail = "generator " + std::to_string(i) + " mod 2 is outside the embedded S_" +
                   std::to_string(letters);
        }
      }
      if (pass) {
        const StabChain img_chain =
            schreier_sims(images, rng.next(), {factorial(letters), false});
        rep.mod2_order = img_chain.order();
        if (rep.mod2_order == factorial(letters)) {
          detail = "image order " + to_decimal(rep.mod2_order) + " = (" +
                   std::to_string(letters) + ")!";
        } else {
          pass = false;
          detail = "images generate order " + to_decimal(rep.mod2_order) + " < (" +
                   std::to_string(letters) + ")! = " + to_decimal(factorial(letters));
        }
      }
    }
    rep.checks.push_back({"mod-2 image inside and onto the embedded S_{2g+2}", pass, detail});
  }

  // (iii) the full order (sound as a certificate only after (i) and (ii)).
  {
    const bool sound = rep.checks[0].pass && rep.checks[1].pass;
    bool pass = false;
    std::string detail;
    if (!sound) {
      detail = "skipped: containment in the preimage is unproven";
    } else {
      const StabChain chain =
          schreier_sims(gens, rng.next(), {rep.target_order, force_sweep});
      rep.group_order = chain.order();
      pass = rep.group_order == rep.target_order;
      detail = "order " + to_decimal(rep.group_order) + (pass ? " = " : " != ") + "target " +
               to_decimal(rep.target_order) +
               (force_sweep ? " (full Schreier sweep)" : " (order certificate)");
    }
    rep.checks.push_back({"group order equals the preimage order", pass, detail});
  }

  rep.pass = true;
  for (const PreimageCheck& c : rep.checks) rep.pass = rep.pass && c.pass;
  return rep;
}

FalsifierResult preimage_falsifier(int g, int k, int trials, std::uint64_t seed,
                                   const std::vector<MatMod>& sampling_gens) {
  if (trials < 1) throw std::invalid_argument("preimage_falsifier: trials < 1");
  FalsifierResult out;
  const unsigned long letters = 2 * static_cast<unsigned long>(g) + 2;
  const BigInt sym_order = factorial(letters);
  const BigInt target =
      sym_order * two_power(static_cast<unsigned long>(k - 1) *
                            (2 * static_cast<unsigned long>(g) * g + g));
  Rng rng(seed);
  std::vector<MatMod> pool = sampling_gens;
  while (pool.size() < 10) pool.push_back(sampling_gens[pool.size() % sampling_gens.size()]);
  auto mix = [&]() -> const MatMod& {
    const std::size_t i = rng.below(pool.size());
    std::size_t j = rng.below(pool.size() - 1);
    if (j >= i) ++j;
    pool[i] = rng.below(2) ? pool[i] * pool[j] : pool[j] * pool[i];
    return pool[i];
  };
  for (int step = 0; step < 80; ++step) mix();
  for (int t = 0; t < trials; ++t) {
    // Draw pairs until the mod-2 images generate the embedded S_{2g+2}.
    MatMod a = MatMod::identity(1, 2), b = a;
    int resamples = 0;
    for (;; ++resamples) {
      a = mix();
      b = mix();
      const StabChain img =
          schreier_sims({a.reduced(2), b.reduced(2)}, rng.next(), {sym_order, false});
      if (img.order() == sym_order) break;
    }
    const StabChain chain = schreier_sims({a, b}, rng.next(), {target, false});
    const BigInt got = chain.order();
    const bool full = got == target;
    out.trials += 1;
    out.full_order_hits += full ? 1 : 0;
    out.notes.push_back("trial " + std::to_string(t) + ": S-surjective pair after " +
                        std::to_string(resamples) + " resamples generated order " +
                        to_decimal(got) + (full ? " = full preimage" : " (proper subgroup!)"));
  }
  return out;
}

}  // namespace galmax::matgrp
