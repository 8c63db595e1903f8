#pragma once

namespace entrolab {

inline constexpr const char* kToolName = "entrolab";
inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace entrolab
