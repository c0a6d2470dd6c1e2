#pragma once

namespace hq {
inline constexpr const char* kVersion = "0.1.0";
}
