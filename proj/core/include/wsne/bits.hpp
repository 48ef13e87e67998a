#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace wsne {

/// Dense bit matrix, row-major, 64-bit packed. Rows are independently
/// addressable as word spans so set intersections stay branch-free.
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(int rows, int cols)
      : rows_(rows), cols_(cols), wpr_((cols + 63) / 64),
        data_(static_cast<size_t>(rows) * wpr_, 0) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int words_per_row() const { return wpr_; }

  bool get(int r, int c) const {
    return (data_[idx(r) + c / 64] >> (c % 64)) & 1u;
  }
  void set(int r, int c, bool v = true) {
    uint64_t mask = uint64_t{1} << (c % 64);
    if (v)
      data_[idx(r) + c / 64] |= mask;
    else
      data_[idx(r) + c / 64] &= ~mask;
  }

  std::span<const uint64_t> row(int r) const { return {&data_[idx(r)], static_cast<size_t>(wpr_)}; }
  std::span<uint64_t> row(int r) { return {&data_[idx(r)], static_cast<size_t>(wpr_)}; }

  int row_popcount(int r) const {
    int c = 0;
    for (uint64_t w : row(r)) c += std::popcount(w);
    return c;
  }

  BitMatrix transposed() const {
    BitMatrix t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
      for (int c = 0; c < cols_; ++c)
        if (get(r, c)) t.set(c, r);
    return t;
  }

  std::string row_string(int r) const {
    std::string s(cols_, '0');
    for (int c = 0; c < cols_; ++c)
      if (get(r, c)) s[c] = '1';
    return s;
  }

  bool operator==(const BitMatrix&) const = default;

 private:
  size_t idx(int r) const { return static_cast<size_t>(r) * wpr_; }

  int rows_ = 0, cols_ = 0, wpr_ = 0;
  std::vector<uint64_t> data_;
};

/// a &= b, in place.
inline void and_into(std::span<uint64_t> a, std::span<const uint64_t> b) {
  for (size_t i = 0; i < a.size(); ++i) a[i] &= b[i];
}

/// a |= b, in place.
inline void or_into(std::span<uint64_t> a, std::span<const uint64_t> b) {
  for (size_t i = 0; i < a.size(); ++i) a[i] |= b[i];
}

inline bool any_bit(std::span<const uint64_t> a) {
  for (uint64_t w : a)
    if (w) return true;
  return false;
}

/// Index of the lowest set bit, or -1.
inline int first_bit(std::span<const uint64_t> a) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i]) return static_cast<int>(i * 64 + std::countr_zero(a[i]));
  return -1;
}

inline void clear_bit(std::span<uint64_t> a, int i) {
  a[static_cast<size_t>(i) / 64] &= ~(uint64_t{1} << (i % 64));
}

inline bool test_bit(std::span<const uint64_t> a, int i) {
  return (a[static_cast<size_t>(i) / 64] >> (i % 64)) & 1u;
}

inline void set_bit(std::span<uint64_t> a, int i) {
  a[static_cast<size_t>(i) / 64] |= uint64_t{1} << (i % 64);
}

}  // namespace wsne
