#pragma once

namespace potbo {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace potbo
