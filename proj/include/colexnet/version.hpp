#pragma once

namespace colexnet {

inline constexpr const char* kToolName = "colexnet";
inline constexpr const char* kToolVersion = "0.1.0";

// Version of the JSON network export schema, bumped on breaking changes.
inline constexpr int kFormatVersion = 1;

} // namespace colexnet
