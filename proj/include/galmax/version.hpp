#pragma once

namespace galmax {

// Reported in every emitted document; bump on any change that can alter
// report bytes, so that archived reports remain attributable.
inline constexpr const char* kToolName = "galmax";
inline constexpr const char* kToolVersion = "1.0.0";

} // namespace galmax
