#pragma once

#include <cstdint>
#include <future>
#include <vector>

namespace wsne {

struct IndexRange {
  uint64_t begin = 0;
  uint64_t end = 0;
};

/// Splits [0,total) into at most `jobs` contiguous ranges. The split is a
/// pure function of (total, jobs), so partitioned scans inspect exactly the
/// same index set regardless of scheduling.
inline std::vector<IndexRange> split_ranges(uint64_t total, int jobs) {
  if (jobs < 1) jobs = 1;
  std::vector<IndexRange> out;
  uint64_t j = static_cast<uint64_t>(jobs);
  if (j > total) j = total ? total : 1;
  uint64_t base = total / j, extra = total % j, pos = 0;
  for (uint64_t i = 0; i < j; ++i) {
    uint64_t len = base + (i < extra ? 1 : 0);
    out.push_back({pos, pos + len});
    pos += len;
  }
  return out;
}

/// Runs fn over each range (concurrently when jobs > 1) and returns the
/// per-range results in range order. Reductions over that ordered vector are
/// schedule-independent by construction.
template <typename Fn>
auto map_ranges(uint64_t total, int jobs, Fn fn)
    -> std::vector<decltype(fn(IndexRange{}))> {
  using R = decltype(fn(IndexRange{}));
  auto ranges = split_ranges(total, jobs);
  std::vector<R> results(ranges.size());
  if (ranges.size() <= 1) {
    for (size_t i = 0; i < ranges.size(); ++i) results[i] = fn(ranges[i]);
    return results;
  }
  std::vector<std::future<R>> futs;
  futs.reserve(ranges.size());
  for (auto& r : ranges)
    futs.push_back(std::async(std::launch::async, [&fn, r] { return fn(r); }));
  for (size_t i = 0; i < futs.size(); ++i) results[i] = futs[i].get();
  return results;
}

}  // namespace wsne
