#pragma once

namespace sgsim {

inline constexpr const char* kToolName = "sgsim";
inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace sgsim
