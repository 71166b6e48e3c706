#pragma once

namespace nqp {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace nqp
