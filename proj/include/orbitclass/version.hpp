#pragma once

namespace orbitclass {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace orbitclass
