#pragma once

namespace wsne {

inline constexpr const char* kVersion = "0.1.0";

/// Identifier of the seedable generator used everywhere randomness is needed.
/// std::mt19937_64 is fully specified by the standard, so a (seed, identifier)
/// pair replays bit-identically on any conforming platform.
inline constexpr const char* kPrngId = "mt19937_64";

/// Identifier of the exact LP solver backing the equilibrium searches.
inline constexpr const char* kLpSolverId = "bland-simplex/cpp_rational";

}  // namespace wsne
