#pragma once

namespace esdqec {

inline constexpr char kToolName[] = "esdqec";
inline constexpr char kToolVersion[] = "0.1.0";

}  // namespace esdqec
