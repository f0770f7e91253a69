#pragma once

namespace zetafield {

inline constexpr const char* kVersion = "zetafield 0.1.0";

}  // namespace zetafield
