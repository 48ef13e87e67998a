#pragma once

#include "wsne/rational.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace wsne {

/// C(n,k) as uint64, or nullopt once the value exceeds 2^63 (kept one bit
/// below the type so callers can add counts without re-checking).
inline std::optional<uint64_t> binom_u64(int n, int k) {
  if (k < 0 || n < 0 || k > n) return uint64_t{0};
  if (k > n - k) k = n - k;
  constexpr uint64_t cap = uint64_t{1} << 63;
  unsigned __int128 r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
    if (r >= cap) return std::nullopt;
  }
  return static_cast<uint64_t>(r);
}

/// C(n,k) saturated at 2^63. Safe in rank arithmetic wherever the rank
/// itself is known to fit (saturated values only ever lose comparisons).
inline uint64_t binom_sat(int n, int k) {
  auto v = binom_u64(n, k);
  return v ? *v : (uint64_t{1} << 63);
}

/// Exact C(n,k) over arbitrary-precision integers.
inline Int binom_big(const Int& n, long k) {
  if (k < 0 || n < 0 || n < k) return 0;
  Int r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// ---------------------------------------------------------------------------
// k-subsets of [0,n) in lexicographic and colexicographic order. Subsets are
// strictly increasing index vectors. Ranks fit uint64 for every (n,k) the
// callers enumerate; callers guard with binom_u64 before unranking.
// ---------------------------------------------------------------------------

inline std::vector<int> first_subset(int k) {
  std::vector<int> s(k);
  for (int i = 0; i < k; ++i) s[i] = i;
  return s;
}

/// Advances s to its lex successor among k-subsets of [0,n); false at the end.
inline bool next_subset_lex(std::vector<int>& s, int n) {
  int k = static_cast<int>(s.size());
  for (int t = k - 1; t >= 0; --t) {
    if (s[t] < n - k + t) {
      ++s[t];
      for (int u = t + 1; u < k; ++u) s[u] = s[u - 1] + 1;
      return true;
    }
  }
  return false;
}

/// Advances s to its colex successor among k-subsets of [0,n); false at the end.
inline bool next_subset_colex(std::vector<int>& s, int n) {
  int k = static_cast<int>(s.size());
  for (int t = 0; t < k; ++t) {
    int limit = (t + 1 < k) ? s[t + 1] : n;
    if (s[t] + 1 < limit) {
      ++s[t];
      for (int u = 0; u < t; ++u) s[u] = u;
      return true;
    }
  }
  return false;
}

inline uint64_t subset_rank_colex(const std::vector<int>& s) {
  uint64_t r = 0;
  for (size_t t = 0; t < s.size(); ++t) r += binom_sat(s[t], static_cast<int>(t) + 1);
  return r;
}

inline std::vector<int> subset_unrank_colex(uint64_t rank, int k) {
  std::vector<int> s(k);
  for (int t = k; t >= 1; --t) {
    int c = t - 1;  // C(t-1, t) = 0, so the search starts below rank+1
    while (binom_sat(c + 1, t) <= rank) ++c;
    s[t - 1] = c;
    rank -= binom_sat(c, t);
  }
  return s;
}

inline uint64_t subset_rank_lex(const std::vector<int>& s, int n) {
  int k = static_cast<int>(s.size());
  uint64_t r = 0;
  int prev = -1;
  for (int t = 0; t < k; ++t) {
    for (int c = prev + 1; c < s[t]; ++c) r += binom_sat(n - 1 - c, k - 1 - t);
    prev = s[t];
  }
  return r;
}

inline std::vector<int> subset_unrank_lex(uint64_t rank, int n, int k) {
  std::vector<int> s(k);
  int c = 0;
  for (int t = 0; t < k; ++t) {
    while (true) {
      uint64_t block = binom_sat(n - 1 - c, k - 1 - t);
      if (rank < block) break;
      rank -= block;
      ++c;
    }
    s[t] = c++;
  }
  return s;
}

}  // namespace wsne
