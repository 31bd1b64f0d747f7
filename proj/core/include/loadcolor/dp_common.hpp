#ifndef LOADCOLOR_DP_COMMON_HPP
#define LOADCOLOR_DP_COMMON_HPP

#include <limits>

namespace loadcolor {

/// Sentinel for infeasible DP cells (the -infinity of the recurrences).
/// Compare against it; never add to it without checking.
inline constexpr long long kInfeasibleValue = std::numeric_limits<long long>::min() / 4;

/// Saturated demand arithmetic: demands clamp at zero once met.
constexpr long long saturate(long long x) { return x > 0 ? x : 0; }

}  // namespace loadcolor

#endif
