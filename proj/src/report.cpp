#include "galmax/report.hpp"

#include <fstream>
#include <sstream>

#include "galmax/sha256.hpp"
#include "galmax/version.hpp"

namespace galmax::report {
namespace {

using nlohmann::ordered_json;

ordered_json poly_json(const PolyZ& f) {
  ordered_json a = ordered_json::array();
  for (const BigInt& c : f) a.push_back(to_decimal(c));
  return a;
}

ordered_json bigints_json(const std::vector<BigInt>& xs) {
  ordered_json a = ordered_json::array();
  for (const BigInt& x : xs) a.push_back(to_decimal(x));
  return a;
}

ordered_json cycle_json(const criteria::CycleWitness& cw) {
  return ordered_json{{"p", cw.p}, {"degrees", cw.degrees}};
}

std::string degrees_str(const std::vector<int>& degs) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < degs.size(); ++i) os << (i ? "," : "") << degs[i];
  os << "]";
  return os.str();
}

const char* pf(bool b) { return b ? "PASS" : "FAIL"; }

ordered_json meta_json(const Meta& meta) {
  ordered_json inputs = ordered_json::array();
  for (const auto& in : meta.inputs) {
    inputs.push_back(ordered_json{{"file", in.name}, {"sha256", in.sha256}});
  }
  return ordered_json{{"tool", kToolName},
                      {"version", kToolVersion},
                      {"seed", std::to_string(meta.seed)},
                      {"inputs", std::move(inputs)}};
}

void meta_text(std::ostream& os, const Meta& meta) {
  os << "tool: " << kToolName << " " << kToolVersion << "   seed: " << meta.seed << "\n";
  for (const auto& in : meta.inputs) {
    os << "input: " << in.name << "  sha256 " << in.sha256 << "\n";
  }
}

}  // namespace

std::string hash_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return sha256_hex(buf.str());
}

ordered_json frobenius_json(const curve::FrobeniusData& fd) {
  return ordered_json{{"p", fd.p},
                      {"point_counts", bigints_json(fd.counts)},
                      {"power_sums", bigints_json(fd.power_sums)},
                      {"charpoly", poly_json(fd.charpoly)},
                      {"charpoly_pretty", curve::charpoly_to_string(fd.charpoly)},
                      {"trace", to_decimal(fd.trace)}};
}

std::string frobenius_text(const curve::FrobeniusData& fd) {
  std::ostringstream os;
  os << "p = " << fd.p << "\n";
  for (std::size_t d = 0; d < fd.counts.size(); ++d) {
    os << "  #C(F_{p^" << d + 1 << "}) = " << to_decimal(fd.counts[d])
       << "   s_" << d + 1 << " = " << to_decimal(fd.power_sums[d]) << "\n";
  }
  os << "  charpoly(Frob_p) = " << curve::charpoly_to_string(fd.charpoly) << "\n"
     << "  trace = " << to_decimal(fd.trace) << "\n";
  return os.str();
}

ordered_json type_json(const criteria::TypeWitness& w) {
  ordered_json factors = ordered_json::array();
  for (const auto& ef : w.factors) {
    factors.push_back(ordered_json{{"alpha", to_decimal(ef.alpha)},
                                   {"degree", ef.q},
                                   {"lifted", poly_json(ef.lifted)},
                                   {"depressed", poly_json(ef.depressed)},
                                   {"valuations", ef.valuations}});
  }
  ordered_json j{{"pass", w.pass},
                 {"t", w.spec.t},
                 {"q", w.spec.qs},
                 {"p", w.spec.p},
                 {"factors", std::move(factors)},
                 {"cofactor", poly_json(w.cofactor)},
                 {"product_verified", w.verified_product}};
  if (!w.pass) j["failure"] = w.failure;
  return j;
}

std::string type_text(const criteria::TypeWitness& w) {
  std::ostringstream os;
  os << "type " << w.spec.t << "-{";
  for (std::size_t i = 0; i < w.spec.qs.size(); ++i) os << (i ? "," : "") << w.spec.qs[i];
  os << "} at p = " << w.spec.p << ": " << pf(w.pass) << "\n";
  if (!w.pass) {
    os << "  " << w.failure << "\n";
    return os.str();
  }
  const BigInt pm = pow_ui(BigInt(static_cast<unsigned long>(w.spec.p)),
                           static_cast<unsigned long>(w.spec.t) + 2);
  os << "  certified factorization mod " << to_decimal(pm) << " (ascending coefficients):\n";
  for (const auto& ef : w.factors) {
    os << "  factor (deg " << ef.q << ", alpha = " << to_decimal(ef.alpha)
       << "): " << "coeffs ";
    os << "[";
    for (std::size_t i = 0; i < ef.lifted.size(); ++i) {
      os << (i ? ", " : "") << to_decimal(ef.lifted[i]);
    }
    os << "]  depressed [";
    for (std::size_t i = 0; i < ef.depressed.size(); ++i) {
      os << (i ? ", " : "") << to_decimal(ef.depressed[i]);
    }
    os << "]  valuations (";
    for (std::size_t i = 0; i < ef.valuations.size(); ++i) {
      os << (i ? "," : "") << ef.valuations[i];
    }
    os << ")\n";
  }
  os << "  cofactor: [";
  for (std::size_t i = 0; i < w.cofactor.size(); ++i) {
    os << (i ? ", " : "") << to_decimal(w.cofactor[i]);
  }
  os << "]\n  product re-multiplies to f: " << pf(w.verified_product) << "\n";
  return os.str();
}

ordered_json galois_json(const criteria::GaloisCertificate& cert) {
  ordered_json j{{"certified", cert.certified},
                 {"prime_bound", cert.bound},
                 {"full_cycle", cycle_json(cert.full_cycle)},
                 {"almost_cycle", cycle_json(cert.almost_cycle)},
                 {"transposition_type", cycle_json(cert.transposition_type)}};
  if (!cert.certified) j["failure"] = cert.failure;
  return j;
}

std::string galois_text(const criteria::GaloisCertificate& cert) {
  std::ostringstream os;
  os << "symmetric-group certificate: " << pf(cert.certified) << "\n";
  if (!cert.certified) {
    os << "  " << cert.failure << "\n";
    return os.str();
  }
  os << "  full cycle           p = " << cert.full_cycle.p << "  degrees "
     << degrees_str(cert.full_cycle.degrees) << "\n"
     << "  (n-1,1) cycle        p = " << cert.almost_cycle.p << "  degrees "
     << degrees_str(cert.almost_cycle.degrees) << "\n"
     << "  transposition type   p = " << cert.transposition_type.p << "  degrees "
     << degrees_str(cert.transposition_type.degrees) << "\n"
     << "  degree multisets re-verified by distinct-degree factorization\n";
  return os.str();
}

ordered_json preimage_json(const matgrp::PreimageReport& pr) {
  ordered_json checks = ordered_json::array();
  for (const auto& c : pr.checks) {
    checks.push_back(ordered_json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  }
  return ordered_json{{"g", pr.g},
                      {"k", pr.k},
                      {"pass", pr.pass},
                      {"target_order", to_decimal(pr.target_order)},
                      {"mod2_order", to_decimal(pr.mod2_order)},
                      {"group_order", to_decimal(pr.group_order)},
                      {"checks", std::move(checks)}};
}

std::string preimage_text(const matgrp::PreimageReport& pr) {
  std::ostringstream os;
  os << "mod-2^" << pr.k << " preimage generation (g = " << pr.g << "): " << pf(pr.pass) << "\n";
  for (const auto& c : pr.checks) {
    os << "  " << pf(c.pass) << "  " << c.name;
    if (!c.detail.empty()) os << " — " << c.detail;
    os << "\n";
  }
  os << "  group order " << to_decimal(pr.group_order) << " / target "
     << to_decimal(pr.target_order) << " (mod-2 image " << to_decimal(pr.mod2_order) << ")\n";
  return os.str();
}

ordered_json to_json(const criteria::MaximalityReport& rep, const Meta& meta) {
  ordered_json conditions = ordered_json::array();
  for (const auto& c : rep.conditions.conditions) {
    conditions.push_back(ordered_json{
        {"id", c.id}, {"pass", c.pass}, {"summary", c.summary}, {"details", c.details}});
  }
  ordered_json witnesses = ordered_json::array();
  for (const auto& w : rep.conditions.witnesses) witnesses.push_back(type_json(w));

  ordered_json exceptional = ordered_json::array();
  for (const auto& ec : rep.exceptional) {
    ordered_json tv{{"pass", ec.transvection.pass}, {"p", ec.transvection.p}};
    if (!ec.transvection.pass) tv["failure"] = ec.transvection.failure;
    ordered_json zy{{"pass", ec.zywina.pass},
                    {"p", ec.zywina.p},
                    {"irreducible_mod_ell", ec.zywina.irreducible},
                    {"trace_nonzero_mod_ell", ec.zywina.trace_ok},
                    {"trace", to_decimal(ec.zywina.trace)}};
    exceptional.push_back(ordered_json{{"ell", ec.ell},
                                       {"pass", ec.pass},
                                       {"transvection_witness", std::move(tv)},
                                       {"zywina", std::move(zy)}});
  }

  ordered_json frob = ordered_json::array();
  for (const auto& fd : rep.frobenius) frob.push_back(frobenius_json(fd));

  ordered_json mod2{{"galois_certificate", galois_json(rep.galois)},
                    {"preimage_skipped", rep.two_adic_skipped}};
  mod2["preimage"] = rep.preimage ? preimage_json(*rep.preimage) : ordered_json(nullptr);

  ordered_json j{{"schema_version", "1"},
                 {"meta", meta_json(meta)},
                 {"curve", ordered_json{{"label", rep.label}, {"genus", rep.g}}},
                 {"verdict", rep.verdict},
                 {"certified", rep.certified},
                 {"mod2", std::move(mod2)},
                 {"conditions", std::move(conditions)},
                 {"type_witnesses", std::move(witnesses)},
                 {"exceptional_primes", std::move(exceptional)},
                 {"frobenius", std::move(frob)},
                 {"residual_assumptions", rep.residual_assumptions},
                 {"notes", rep.notes}};
  return j;
}

std::string to_text(const criteria::MaximalityReport& rep, const Meta& meta) {
  std::ostringstream os;
  os << "== Galois-image maximality report: " << rep.label << " (genus " << rep.g << ") ==\n";
  meta_text(os, meta);
  os << "\nverdict: " << rep.verdict << "\n";

  os << "\n-- mod-2 layer --\n" << galois_text(rep.galois);
  if (rep.two_adic_skipped) {
    os << "mod-8 preimage generation: SKIPPED by flag\n";
  } else if (rep.preimage) {
    os << preimage_text(*rep.preimage);
  }

  os << "\n-- odd-prime layer: the six conditions --\n";
  for (const auto& c : rep.conditions.conditions) {
    os << "(" << c.id << ") " << pf(c.pass) << " — " << c.summary << "\n";
    for (const auto& d : c.details) os << "      " << d << "\n";
  }

  os << "\n-- exceptional primes --\n";
  for (const auto& ec : rep.exceptional) {
    os << "ell = " << ec.ell << ": " << pf(ec.pass) << "\n";
    if (ec.transvection.pass) {
      os << "      transvection witness: type 1-{2} at p = " << ec.transvection.p << "\n";
    } else {
      os << "      transvection witness: FAIL — " << ec.transvection.failure << "\n";
    }
    os << "      charpoly at p = " << ec.zywina.p << ": "
       << (ec.zywina.irreducible ? "irreducible" : "NOT irreducible") << " mod " << ec.ell
       << ", trace " << to_decimal(ec.zywina.trace)
       << (ec.zywina.trace_ok ? " nonzero" : " ZERO") << " mod " << ec.ell << "\n";
  }

  os << "\n-- Frobenius data --\n";
  for (const auto& fd : rep.frobenius) os << frobenius_text(fd);

  os << "\n-- residual assumptions (relied upon, not re-proven) --\n";
  for (std::size_t i = 0; i < rep.residual_assumptions.size(); ++i) {
    os << "[" << i + 1 << "] " << rep.residual_assumptions[i] << "\n";
  }
  if (!rep.notes.empty()) {
    os << "\n-- notes --\n";
    for (const auto& n : rep.notes) os << "- " << n << "\n";
  }
  return os.str();
}

}  // namespace galmax::report
