#pragma once

namespace vtwin {

// Everything in the library is exact for any strand count; these limits only
// guard the front ends and the factorial-time enumerations.
struct Limits {
  int max_strands = 8;
  int max_automorphism_strands = 6;
};

inline constexpr Limits kDefaultLimits{};

} // namespace vtwin
