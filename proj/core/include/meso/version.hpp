#pragma once

namespace meso {

inline constexpr const char* kToolName = "mesonet";
inline constexpr const char* kToolVersion = "0.1.0";

} // namespace meso
