#pragma once

namespace kepot {

inline constexpr const char* kVersion = "1.0.0";

}  // namespace kepot
