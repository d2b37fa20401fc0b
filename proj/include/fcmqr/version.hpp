#pragma once

namespace fcmqr {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace fcmqr
