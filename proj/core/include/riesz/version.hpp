#pragma once

namespace riesz {

inline constexpr const char* kToolVersion = "riesz-certify 0.1.0";

}  // namespace riesz
