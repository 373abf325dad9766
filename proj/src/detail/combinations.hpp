#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "signrank/matrix.hpp"

namespace signrank::detail {

/// Advances idx (strictly increasing, values < n) to the next k-subset in
/// lexicographic order. Returns false after the last subset.
inline bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t k = idx.size();
  std::size_t i = k;
  while (i > 0) {
    --i;
    if (idx[i] < n - k + i) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

inline std::vector<std::size_t> first_combination(std::size_t k) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  return idx;
}

/// Restriction of row r to cols, packed with cols[i] at bit i. cols.size() <= 64.
inline std::uint64_t project_row(const SignMatrix& s, std::size_t r, std::span<const std::size_t> cols) {
  std::uint64_t key = 0;
  const auto bits = s.row_bits(r);
  for (std::size_t i = 0; i < cols.size(); ++i) {
    const std::size_t c = cols[i];
    key |= ((bits[c >> 6] >> (c & 63)) & 1u) << i;
  }
  return key;
}

/// Fixed-size bit occupancy table used to count distinct keys below 2^k.
class Occupancy {
 public:
  explicit Occupancy(std::size_t k) : words_(k >= 6 ? (std::size_t{1} << (k - 6)) : 1, 0) {}
  void clear() { std::fill(words_.begin(), words_.end(), 0); count_ = 0; }
  /// Returns true if key was not present before.
  bool insert(std::uint64_t key) {
    auto& w = words_[key >> 6];
    const std::uint64_t bit = std::uint64_t{1} << (key & 63);
    if (w & bit) return false;
    w |= bit;
    ++count_;
    return true;
  }
  std::uint64_t count() const noexcept { return count_; }

 private:
  std::vector<std::uint64_t> words_;
  std::uint64_t count_ = 0;
};

}  // namespace signrank::detail
