#pragma once

namespace orthoforms {

inline constexpr const char* kToolName = "orthoforms";
inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace orthoforms
