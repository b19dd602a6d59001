// Copyright 2026 The lcfk Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <span>
#include <algorithm>
#include <vector>

namespace lcfk {

/// Range-minimum over an immutable array, returning the position of the
/// leftmost minimum. Blocks of 64 answer in-block queries from a per-position
/// bit mask of the monotone stack; a sparse table over block minima covers
/// the rest. O(n) build, O(1) queries.
template <typename T>
class RangeMinimum {
 public:
  RangeMinimum() = default;

  explicit RangeMinimum(std::vector<T> values) : values_(std::move(values)) {
    const std::size_t n = values_.size();
    if (n == 0) return;
    mask_.resize(n);
    std::uint64_t stack = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if ((i & 63) == 0) stack = 0;
      const std::size_t base = i & ~std::size_t{63};
      while (stack != 0) {
        const std::size_t top = base + 63 - static_cast<std::size_t>(std::countl_zero(stack));
        if (!(values_[i] < values_[top])) break;
        stack &= ~(std::uint64_t{1} << (top & 63));
      }
      stack |= std::uint64_t{1} << (i & 63);
      mask_[i] = stack;
    }
    const std::size_t blocks = (n + 63) / 64;
    const int levels = std::bit_width(blocks);
    table_.resize(levels);
    table_[0].resize(blocks);
    for (std::size_t b = 0; b < blocks; ++b) table_[0][b] = in_block(b * 64, std::min(n, b * 64 + 64) - 1);
    for (int j = 1; j < levels; ++j) {
      const std::size_t span = std::size_t{1} << j;
      const std::size_t half = span >> 1;
      auto& row = table_[j];
      const auto& prev = table_[j - 1];
      row.resize(blocks - span + 1);
      for (std::size_t i = 0; i + span <= blocks; ++i) row[i] = better(prev[i], prev[i + half]);
    }
  }

  std::size_t size() const { return values_.size(); }
  const T& value(std::size_t i) const { return values_[i]; }

  /// Position of the minimum of values[lo..hi], inclusive; requires lo <= hi.
  std::uint32_t argmin(std::size_t lo, std::size_t hi) const {
    assert(lo <= hi && hi < values_.size());
    const std::size_t bl = lo >> 6, bh = hi >> 6;
    if (bl == bh) return in_block(lo, hi);
    std::uint32_t best = in_block(lo, bl * 64 + 63);
    if (bl + 1 < bh) {
      const std::size_t a = bl + 1, b = bh - 1;
      const int j = std::bit_width(b - a + 1) - 1;
      best = better(best, better(table_[j][a], table_[j][b + 1 - (std::size_t{1} << j)]));
    }
    return better(best, in_block(bh * 64, hi));
  }

  const T& min(std::size_t lo, std::size_t hi) const { return values_[argmin(lo, hi)]; }

 private:
  // a must not lie to the right of b.
  std::uint32_t better(std::uint32_t a, std::uint32_t b) const { return values_[b] < values_[a] ? b : a; }

  std::uint32_t in_block(std::size_t lo, std::size_t hi) const {
    const std::uint64_t m = mask_[hi] & (~std::uint64_t{0} << (lo & 63));
    return static_cast<std::uint32_t>((lo & ~std::size_t{63}) + static_cast<std::size_t>(std::countr_zero(m)));
  }

  std::vector<T> values_;
  std::vector<std::uint64_t> mask_;
  std::vector<std::vector<std::uint32_t>> table_;  // over block minima
};

}  // namespace lcfk
