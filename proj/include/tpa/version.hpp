#pragma once

namespace tpa {
inline constexpr const char* kVersion = "1.0.0";
inline constexpr const char* kBackend = "lapacke-zgesdd";
}  // namespace tpa
