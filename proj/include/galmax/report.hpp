#pragma once

/// Report assembly: serializes pipeline results to versioned JSON and to an
/// aligned human-readable text form. Reports are deterministic — no
/// timestamps, decimal strings for every big integer, stable field order —
/// so reruns with the same inputs and seed are byte-identical.

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "galmax/criteria.hpp"
#include "galmax/curve.hpp"
#include "galmax/matgrp.hpp"

namespace galmax::report {

struct InputHash {
  std::string name;    // basename as given on the command line
  std::string sha256;  // hex digest of the file bytes
};

/// Run metadata embedded in every report.
struct Meta {
  std::uint64_t seed = 0;
  std::vector<InputHash> inputs;
};

/// SHA-256 of a file's raw bytes. Throws std::invalid_argument if unreadable.
std::string hash_file(const std::string& path);

nlohmann::ordered_json to_json(const criteria::MaximalityReport& rep, const Meta& meta);
std::string to_text(const criteria::MaximalityReport& rep, const Meta& meta);

// Sub-reports for the single-purpose commands.
nlohmann::ordered_json frobenius_json(const curve::FrobeniusData& fd);
std::string frobenius_text(const curve::FrobeniusData& fd);
nlohmann::ordered_json type_json(const criteria::TypeWitness& w);
std::string type_text(const criteria::TypeWitness& w);
nlohmann::ordered_json galois_json(const criteria::GaloisCertificate& cert);
std::string galois_text(const criteria::GaloisCertificate& cert);
nlohmann::ordered_json preimage_json(const matgrp::PreimageReport& pr);
std::string preimage_text(const matgrp::PreimageReport& pr);

}  // namespace galmax::report
