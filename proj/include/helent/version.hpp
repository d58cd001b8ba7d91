#pragma once

namespace helent {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace helent
