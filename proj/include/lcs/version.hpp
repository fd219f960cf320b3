#pragma once

namespace lcs {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace lcs
