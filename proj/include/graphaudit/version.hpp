#pragma once

namespace graphaudit {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace graphaudit
