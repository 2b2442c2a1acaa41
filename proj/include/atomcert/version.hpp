#pragma once

namespace atomcert {

inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace atomcert
