#pragma once

namespace ordspec {

inline constexpr const char* kVersion = "1.0.0";

}  // namespace ordspec
