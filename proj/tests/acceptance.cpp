// Acceptance suite: one PASS/FAIL line per criterion, exit 0 only if all
// pass. Invoked plain it runs the default suite; invoked with
// --long-if-enabled it runs the minutes-scale mod-8 verification for the
// bundled genus-3 generator pair, or skips (exit 77) unless
// GALMAX_LONG_TESTS=1.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>

#include "galmax/arith.hpp"
#include "galmax/bigint.hpp"
#include "galmax/criteria.hpp"
#include "galmax/curve.hpp"
#include "galmax/matgrp.hpp"
#include "galmax/symembed.hpp"
#include "galmax/symplectic.hpp"

using namespace galmax;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

void line(int criterion, bool pass, const std::string& what, double secs) {
  std::ostringstream os;
  os << (pass ? "PASS" : "FAIL") << "  criterion " << criterion << ": " << what << "  ["
     << secs << "s]";
  std::cout << os.str() << std::endl;
  if (!pass) ++failures;
}

void info(const std::string& what) { std::cout << "      " << what << std::endl; }

BigInt factorial(int n) {
  BigInt r(1);
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

int run_cli(const std::string& args, const std::string& outfile) {
  const std::string cmd = "./galmax " + args + " > " + outfile + " 2>&1";
  const int st = std::system(cmd.c_str());
  if (st == -1 || !WIFEXITED(st)) return -1;
  return WEXITSTATUS(st);
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

// --- criterion 1: discriminant reproductions ------------------------------

void criterion1(const curve::CurveSpec& c, const criteria::AnniChoices& ch, bool& all,
                std::string& detail) {
  const auto t0 = Clock::now();
  const BigInt disc = poly_discriminant(c.f);
  BigInt claimed(1);
  for (const auto& [base, exp] : ch.disc_factors)
    for (int i = 0; i < exp; ++i) claimed *= base;
  claimed *= ch.disc_sign;
  const bool ok = disc == claimed;
  const double secs = seconds_since(t0);
  all = all && ok && secs < 1.0;
  std::ostringstream os;
  os << c.label << ": disc has sign " << (ch.disc_sign > 0 ? "+" : "-") << ", "
     << ch.disc_factors.size() << " claimed prime powers, exact match "
     << (ok ? "yes" : "NO") << " in " << secs << "s";
  detail = os.str();
}

// --- shared charpoly store (criterion 2 feeds criterion 4) ----------------

struct FrobStore {
  std::map<std::pair<std::string, std::uint64_t>, curve::FrobeniusData> at;
};

PolyZ ascending(std::initializer_list<long> descending) {
  PolyZ f;
  for (auto it = std::rbegin(descending); it != std::rend(descending); ++it)
    f.emplace_back(*it);
  return f;
}

void criterion2(const curve::CurveSpec& c2, const curve::CurveSpec& c3, FrobStore& store) {
  const auto t0 = Clock::now();
  struct Want {
    const curve::CurveSpec* c;
    std::uint64_t p;
    PolyZ expect;
  };
  const std::vector<Want> wants{
      {&c2, 401, ascending({1, -49, 1257, -19649, 160801})},
      {&c2, 61, ascending({1, 6, 54, 366, 3721})},
      {&c2, 277, ascending({1, 31, 765, 8587, 76729})},
      {&c3, 101, ascending({1, 10, 60, 222, 6060, 102010, 1030301})},
      {&c3, 89, ascending({1, -3, 93, 40, 8277, -23763, 704969})},
      {&c3, 127, ascending({1, -12, 8, 548, 1016, -193548, 2048383})},
      {&c3, 103, ascending({1, -7, 55, -191, 5665, -74263, 1092727})},
  };
  bool all = true;
  double largest = 0;
  for (const auto& w : wants) {
    const auto t1 = Clock::now();
    curve::CountOptions opts;  // workers = 1: the time bound is single-threaded
    const auto fd = curve::frobenius_data(*w.c, w.p, opts);
    const double secs = seconds_since(t1);
    if (w.p == 127) largest = secs;
    const bool ok = fd.charpoly == w.expect;
    if (!ok) info("charpoly mismatch at p = " + std::to_string(w.p));
    all = all && ok;
    store.at[{w.c->label, w.p}] = fd;
  }
  const double secs = seconds_since(t0);
  all = all && largest < 60.0;
  std::ostringstream os;
  os << "seven Frobenius charpolys bit-exact; largest run (p = 127, ~2.1e6 points) took "
     << largest << "s of " << secs << "s total, single-threaded";
  line(2, all, os.str(), secs);
}

void criterion3(const curve::CurveSpec& c2, const curve::CurveSpec& c3) {
  const auto t0 = Clock::now();
  struct Want {
    const curve::CurveSpec* c;
    criteria::TypeSpec spec;
  };
  const std::vector<Want> wants{
      {&c2, {1, {2}, 3}},   {&c2, {1, {2}, 5}},  {&c2, {1, {3, 3}, 17}}, {&c2, {2, {5}, 7}},
      {&c3, {1, {2}, 5}},   {&c3, {1, {2}, 13}}, {&c3, {1, {3, 5}, 17}}, {&c3, {2, {7}, 19}},
  };
  bool all = true;
  int passed = 0;
  for (const auto& w : wants) {
    const auto wit = criteria::detect_type(w.c->f, w.spec);
    if (wit.pass && wit.verified_product) ++passed;
    else
      info("type detection failed at p = " + std::to_string(w.spec.p) + ": " + wit.failure);
    all = all && wit.pass && wit.verified_product;
  }
  const double secs = seconds_since(t0);
  all = all && secs < 5.0;
  line(3, all, std::to_string(passed) + "/8 p-adic factorization types detected and certified",
       secs);
}

void criterion4(const curve::CurveSpec& c2, const curve::CurveSpec& c3,
                const criteria::AnniChoices& ch2, const criteria::AnniChoices& ch3,
                const FrobStore& store) {
  const auto t0 = Clock::now();
  bool all = true;
  int passed = 0, total = 0;
  const auto run = [&](const curve::CurveSpec& c, const criteria::AnniChoices& ch) {
    for (const auto& [ell, p] : ch.zywina) {
      ++total;
      const auto it = store.at.find({c.label, p});
      if (it == store.at.end()) {
        info("no stored charpoly for p = " + std::to_string(p));
        all = false;
        continue;
      }
      const auto& fd = it->second;
      const auto fac = arith::factor_mod_p(fd.charpoly, BigInt(ell), 0);
      const bool irred = fac.size() == 1 && fac[0].multiplicity == 1 &&
                         degree(fac[0].factor) == 2 * c.g;
      const bool tr = mod_floor(fd.trace, BigInt(ell)) != 0;
      if (irred && tr) ++passed;
      else
        info("pair (ell = " + std::to_string(ell) + ", p = " + std::to_string(p) +
             ") failed: irreducible = " + (irred ? "yes" : "no") +
             ", trace nonzero = " + (tr ? "yes" : "no"));
      all = all && irred && tr;
    }
  };
  run(c2, ch2);
  run(c3, ch3);
  const double secs = seconds_since(t0);
  all = all && secs < 1.0;
  line(4, all,
       std::to_string(passed) + "/" + std::to_string(total) +
           " (ell, p) pairs: charpoly irreducible mod ell with nonzero trace",
       secs);
}

void criterion5() {
  const auto t0 = Clock::now();
  bool all = true;
  for (int g = 2; g <= 6; ++g) {
    for (std::uint32_t ell : {2u, 3u, 5u}) {
      const auto sc = symplectic::commutator_span_check(g, ell);
      const bool ok = sc.equal && sc.dim == static_cast<std::size_t>(2 * g * g + g);
      if (!ok)
        info("commutator span failed at g = " + std::to_string(g) +
             ", ell = " + std::to_string(ell));
      all = all && ok;
    }
    const auto cj = symembed::conjugation_span_check(g);
    if (!(cj.equal && cj.witnesses_ok))
      info("conjugation span failed at g = " + std::to_string(g) +
           (cj.failures.empty() ? "" : (": " + cj.failures.front())));
    all = all && cj.equal && cj.witnesses_ok;

    const auto ts = symembed::transposition_generators(g);
    const MatMod id = MatMod::identity(2 * g, 2);
    const auto form = symplectic::SympForm::adjacent_pairs(g, 2);
    bool rel = true;
    for (std::size_t i = 0; i < ts.size(); ++i) {
      rel = rel && (ts[i] * ts[i] == id) &&
            (symplectic::multiplier(ts[i], form) == std::optional<std::uint32_t>(1));
      for (std::size_t j = i + 1; j < ts.size(); ++j)
        rel = rel && (j == i + 1 ? ts[i] * ts[j] * ts[i] == ts[j] * ts[i] * ts[j]
                                 : ts[i] * ts[j] == ts[j] * ts[i]);
    }
    if (!rel) info("transposition relations failed at g = " + std::to_string(g));
    all = all && rel;

    // The embedded symmetric group has order (2g+2)!; comparison against
    // |Sp_2g(F_2)| shows surjectivity exactly at g = 2.
    matgrp::BuildOptions opts;
    opts.known_order = factorial(2 * g + 2);
    const auto chain = matgrp::schreier_sims(ts, 0, opts);
    const BigInt sp_order = symplectic::sp2g_f2_order(g);
    const bool order_ok = chain.order() == factorial(2 * g + 2);
    const bool surj_ok = (g == 2) ? (chain.order() == sp_order) : (chain.order() < sp_order);
    if (!(order_ok && surj_ok))
      info("embedding order check failed at g = " + std::to_string(g));
    all = all && order_ok && surj_ok;
  }
  const double secs = seconds_since(t0);
  all = all && secs < 30.0;
  line(5, all,
       "bracket spans, conjugation spans, S_{2g+2} relations and embedding orders for g = 2..6 "
       "(surjective onto Sp only at g = 2, order 720)",
       secs);
}

void criterion6_default() {
  const auto t0 = Clock::now();
  const auto rep =
      matgrp::verify_preimage_generation(2, 3, matgrp::builtin_preimage_generators(2, 3), 0);
  bool all = rep.pass && rep.mod2_order == 720 &&
             rep.group_order == parse_bigint("754974720") &&
             rep.group_order == BigInt(720) * pow_ui(BigInt(2), 20);
  for (const auto& c : rep.checks)
    if (!c.pass) info("check failed: " + c.name + " — " + c.detail);
  const double secs = seconds_since(t0);
  all = all && secs < 60.0;
  line(6, all,
       "builtin transvection set generates the full mod-8 preimage of S_6 (order 720 * 2^20 = "
       "754974720)",
       secs);
}

void criterion6_long() {
  const auto t0 = Clock::now();
  const auto gens = matgrp::load_generator_file("data/preimage_gens_g3.json");
  const auto rep = matgrp::verify_preimage_generation(3, 3, gens, 0, /*force_sweep=*/true);
  bool all = rep.pass && rep.mod2_order == 40320 &&
             rep.group_order == parse_bigint("177329235327713280") &&
             rep.group_order == BigInt(40320) * pow_ui(BigInt(2), 42);
  for (const auto& c : rep.checks) info(std::string(c.pass ? "ok  " : "BAD ") + c.name);
  const double secs = seconds_since(t0);
  line(6, all,
       "bundled generator pair generates the full mod-8 preimage of S_8 (membership certified, "
       "mod-2 order 40320, total order 40320 * 2^42 = 177329235327713280, deterministic sweep "
       "forced)",
       secs);

  // Statistical falsifier: labeled evidence, not proof.
  const auto t1 = Clock::now();
  const auto fz = matgrp::preimage_falsifier(3, 3, 5, 2024, gens);
  info("falsifier (statistical evidence, not proof): " + std::to_string(fz.full_order_hits) +
       "/" + std::to_string(fz.trials) +
       " sampled pairs with mod-2 image S_8 already generate the full preimage  [" +
       std::to_string(seconds_since(t1)) + "s]");
  for (const auto& n : fz.notes) info(n);
}

void criterion7(const curve::CurveSpec& c2, const curve::CurveSpec& c3) {
  for (const auto* c : {&c2, &c3}) {
    const auto t0 = Clock::now();
    const auto cert = criteria::galois_certificate(c->f, 10000, 0);
    const bool witnesses_small = cert.full_cycle.p < 10000 && cert.almost_cycle.p < 10000 &&
                                 cert.transposition_type.p < 10000;
    const double secs = seconds_since(t0);
    const bool ok = cert.certified && witnesses_small && secs < 10.0;
    std::ostringstream os;
    os << c->label << ": Galois group of f is S_" << degree(c->f) << " (witness primes "
       << cert.full_cycle.p << ", " << cert.almost_cycle.p << ", " << cert.transposition_type.p
       << ", all < 10^4)";
    line(7, ok, os.str(), secs);
  }
}

void criterion8() {
  // c3 first: every condition passes, exit 0, plain "index 2 certified".
  {
    const auto t0 = Clock::now();
    const int rc = run_cli("verify data/c3.json data/c3-choices.json", "accept_c3_report.txt");
    const std::string text = slurp("accept_c3_report.txt");
    bool ok = rc == 0;
    ok = ok && text.find("index 2 certified") != std::string::npos;
    ok = ok && text.find("conditional") == std::string::npos;
    for (const auto& t : criteria::residual_assumption_texts())
      ok = ok && text.find(t) != std::string::npos;
    line(8, ok, "cli verify c3: exit 0, all six conditions PASS, residual assumptions verbatim",
         seconds_since(t0));
  }
  // c2: exit 0 with the conditional verdict, condition (5) reported as computed.
  {
    const auto t0 = Clock::now();
    const int rc = run_cli("verify data/c2.json", "accept_c2_report.txt");
    const std::string text = slurp("accept_c2_report.txt");
    bool ok = rc == 0;
    ok = ok &&
         text.find("index 2 certified, conditional on condition-(5) outcome and listed "
                   "residual assumptions") != std::string::npos;
    // Condition 5 must be reported exactly as computed: all six residues fail.
    ok = ok && text.find("a_0") != std::string::npos;
    for (const auto& t : criteria::residual_assumption_texts())
      ok = ok && text.find(t) != std::string::npos;
    line(8, ok,
         "cli verify c2: exit 0, condition (5) reported as computed, conditional verdict, "
         "residual assumptions verbatim",
         seconds_since(t0));
  }
}

void criterion9() {
  line(9, true,
       "exclusions: density/asymptotic statements and maximal-subgroup lattice enumeration are "
       "out of scope by design; nothing here verifies them",
       0.0);
}

int run_default() {
  const auto c2 = curve::load_curve("data/c2.json");
  const auto c3 = curve::load_curve("data/c3.json");
  const auto ch2 = criteria::load_choices("data/c2-choices.json");
  const auto ch3 = criteria::load_choices("data/c3-choices.json");

  {
    const auto t0 = Clock::now();
    bool all = true;
    std::string d2, d3;
    criterion1(c2, ch2, all, d2);
    criterion1(c3, ch3, all, d3);
    line(1, all, "discriminant reproductions — " + d2 + "; " + d3, seconds_since(t0));
  }

  FrobStore store;
  criterion2(c2, c3, store);
  criterion3(c2, c3);
  criterion4(c2, c3, ch2, ch3, store);
  criterion5();
  criterion6_default();
  criterion7(c2, c3);
  criterion8();
  criterion9();

  if (failures) {
    std::cout << failures << " criterion check(s) FAILED" << std::endl;
    return 1;
  }
  std::cout << "all acceptance criteria PASS" << std::endl;
  return 0;
}

int run_long() {
  const char* env = std::getenv("GALMAX_LONG_TESTS");
  if (env == nullptr || std::string(env) != "1") {
    std::cout << "long suite skipped (set GALMAX_LONG_TESTS=1 to enable)" << std::endl;
    return 77;
  }
  criterion6_long();
  if (failures) {
    std::cout << failures << " criterion check(s) FAILED" << std::endl;
    return 1;
  }
  std::cout << "long acceptance criteria PASS" << std::endl;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  for (int i = 1; i < argc; ++i) {
    const std::string arg(argv[i]);
    if (arg == "--long-if-enabled") return run_long();  // honors GALMAX_LONG_TESTS
    if (arg == "--long") {                              // unconditional long run
      criterion6_long();
      return failures ? 1 : 0;
    }
  }
  return run_default();
}
