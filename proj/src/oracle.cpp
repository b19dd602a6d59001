// Copyright 2026 The lcfk Authors
// SPDX-License-Identifier: Apache-2.0

#include "lcfk/oracle.hpp"

#include <algorithm>
#include <tuple>

namespace lcfk::oracle {

namespace {

void offer(OracleResult& best, std::uint32_t len, std::uint32_t xs, std::uint32_t ys) {
  // Longer wins; ties go to the smaller (x_start, y_start).
  if (len > best.length || (len == best.length && len > 0 &&
                            std::tie(xs, ys) < std::tie(best.x_start, best.y_start))) {
    best = {len, xs, ys};
  }
}

}  // namespace

OracleResult lcf_k_brute(std::string_view x, std::string_view y, int k) {
  OracleResult best;
  const auto nx = static_cast<std::int64_t>(x.size());
  const auto ny = static_cast<std::int64_t>(y.size());
  // Diagonal `shift` pairs x[i] with y[i + shift].
  for (std::int64_t shift = -(nx - 1); shift <= ny - 1; ++shift) {
    const std::int64_t i0 = std::max<std::int64_t>(0, -shift);
    const std::int64_t i1 = std::min<std::int64_t>(nx, ny - shift);
    std::int64_t lo = i0;
    int mismatches = 0;
    for (std::int64_t hi = i0; hi < i1; ++hi) {
      if (x[hi] != y[hi + shift]) ++mismatches;
      while (mismatches > k) {
        if (x[lo] != y[lo + shift]) --mismatches;
        ++lo;
      }
      offer(best, static_cast<std::uint32_t>(hi + 1 - lo), static_cast<std::uint32_t>(lo),
            static_cast<std::uint32_t>(lo + shift));
    }
  }
  return best;
}

OracleResult lcf_k_extend(std::string_view x, std::string_view y, int k) {
  OracleResult best;
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = 0; j < y.size(); ++j) {
      int mismatches = 0;
      std::size_t len = 0;
      while (i + len < x.size() && j + len < y.size()) {
        if (x[i + len] != y[j + len] && ++mismatches > k) break;
        ++len;
      }
      offer(best, static_cast<std::uint32_t>(len), static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j));
    }
  }
  return best;
}

std::uint32_t lcp_d_brute(std::string_view u, std::string_view v, int d) {
  const std::size_t n = std::min(u.size(), v.size());
  int mismatches = 0;
  for (std::size_t p = 0; p < n; ++p) {
    if (u[p] != v[p] && ++mismatches > d) return static_cast<std::uint32_t>(p);
  }
  return static_cast<std::uint32_t>(n);
}

std::uint32_t hamming(std::string_view a, std::string_view b) {
  std::uint32_t count = 0;
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) count += a[i] != b[i];
  return count;
}

}  // namespace lcfk::oracle
