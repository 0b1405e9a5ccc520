#pragma once

/// SHA-256 (FIPS 180-4), used to fingerprint input files inside reports.
/// Self-contained so that report hashing never depends on system crypto
/// libraries; correctness is pinned by the standard test vectors in the
/// unit suite.

#include <string>
#include <string_view>

namespace galmax {

/// Hex digest (64 lowercase hex characters) of the exact byte sequence.
std::string sha256_hex(std::string_view bytes);

} // namespace galmax
