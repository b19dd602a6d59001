// Copyright 2026 The lcfk Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string_view>

namespace lcfk::oracle {

struct OracleResult {
  std::uint32_t length = 0;
  std::uint32_t x_start = 0;
  std::uint32_t y_start = 0;
};

/// Longest equal-length factors of x and y at Hamming distance <= k, by a
/// two-pointer window along every diagonal. O(|x| |y|) time, O(1) extra space.
/// Among longest answers the smallest (x_start, y_start) is reported.
OracleResult lcf_k_brute(std::string_view x, std::string_view y, int k);

/// Same contract, by extending from every start pair until the (k+1)-th
/// mismatch. Cubic; only for cross-checking lcf_k_brute.
OracleResult lcf_k_extend(std::string_view x, std::string_view y, int k);

/// Largest p with d_H(u[0,p), v[0,p)) <= d.
std::uint32_t lcp_d_brute(std::string_view u, std::string_view v, int d);

std::uint32_t hamming(std::string_view a, std::string_view b);

}  // namespace lcfk::oracle
