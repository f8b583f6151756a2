#pragma once

namespace xqcalc {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace xqcalc
