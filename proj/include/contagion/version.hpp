#pragma once

namespace contagion {
inline constexpr const char* kVersion = "0.1.0";
}
