#pragma once

namespace conseq {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace conseq
