// Copyright 2026 The lcfk Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace lcfk {

/// Internal symbol code. Input bytes map to kFirstInputSymbol + byte, the four
/// text separators occupy [0, 4) and the wildcard sorts above every byte.
using Symbol = std::int32_t;

inline constexpr Symbol kSeparatorCount = 4;
inline constexpr Symbol kFirstInputSymbol = kSeparatorCount;
inline constexpr Symbol kWildcard = kFirstInputSymbol + 256;
inline constexpr Symbol kAlphabetSize = kWildcard + 1;

/// Byte that spells the wildcard in rendered strings; rejected in input.
inline constexpr char kWildcardByte = '$';

constexpr Symbol encode_byte(unsigned char c) { return kFirstInputSymbol + c; }
constexpr bool is_separator(Symbol s) { return s < kSeparatorCount; }

inline char render_symbol(Symbol s) {
  if (s == kWildcard) return kWildcardByte;
  if (is_separator(s)) return '#';
  return static_cast<char>(static_cast<unsigned char>(s - kFirstInputSymbol));
}

/// Bad user input: reserved symbols, malformed files, out-of-range options.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A caller broke an operation's precondition (invalid handle, foreign trie).
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Throws InputError if `text` contains the reserved wildcard byte.
inline void check_alphabet(std::string_view text, std::string_view what) {
  auto pos = text.find(kWildcardByte);
  if (pos != std::string_view::npos) {
    throw InputError(std::string(what) + " contains reserved symbol '$' at offset " +
                     std::to_string(pos));
  }
}

}  // namespace lcfk
