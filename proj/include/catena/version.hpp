#pragma once

namespace catena {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace catena
