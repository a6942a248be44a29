#pragma once

namespace pga {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace pga
