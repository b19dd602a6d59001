// Copyright 2026 The lcfk Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace lcfk::testing {

inline std::string random_string(std::mt19937_64& rng, std::size_t n, int sigma) {
  static constexpr char kLetters[] = "abcdefghijklmnopqrstuvwxyz";
  std::string s(n, 'a');
  for (auto& c : s) c = kLetters[rng() % static_cast<unsigned>(sigma)];
  return s;
}

inline std::size_t uniform(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return lo + rng() % (hi - lo + 1);
}

// Every string over the first sigma letters of the given length.
inline std::vector<std::string> all_strings(std::size_t n, int sigma) {
  std::vector<std::string> out{""};
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::string> next;
    for (const auto& s : out) {
      for (int c = 0; c < sigma; ++c) next.push_back(s + static_cast<char>('a' + c));
    }
    out = std::move(next);
  }
  return out;
}

}  // namespace lcfk::testing
