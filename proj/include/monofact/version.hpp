#pragma once

namespace monofact {

inline constexpr const char* tool_name = "monofact";
inline constexpr const char* version_string = "0.1.0";

}  // namespace monofact
