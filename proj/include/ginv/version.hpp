#pragma once

namespace ginv {

inline constexpr const char* kVersion = "0.1.0";

} // namespace ginv
