// Copyright 2026 The lcfk Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lcfk/range_min.hpp"
#include "lcfk/symbols.hpp"

namespace lcfk {

/// The four texts of the joint index.
enum class TextId : std::uint8_t { X = 0, XR = 1, Y = 2, YR = 3 };

inline constexpr std::array<TextId, 4> kAllTexts = {TextId::X, TextId::XR, TextId::Y, TextId::YR};

std::string_view text_name(TextId id);

/// A suffix of one of the indexed texts. start == length denotes the empty suffix.
struct SuffixRef {
  TextId text = TextId::X;
  std::uint32_t start = 0;

  friend auto operator<=>(const SuffixRef&, const SuffixRef&) = default;
};

/// Joint suffix structure over X, X^R, Y and Y^R.
///
/// The texts are concatenated as X #3 X^R #2 Y #1 Y^R #0 where the separators
/// are distinct and sort below every input byte, so suffix order is
/// lexicographic and no common extension ever crosses a text boundary.
/// Immutable after construction; concurrent const queries are safe.
class TextIndex {
 public:
  TextIndex(std::string_view x, std::string_view y);

  std::string_view text(TextId id) const { return texts_[static_cast<int>(id)]; }
  std::uint32_t length(TextId id) const {
    return static_cast<std::uint32_t>(texts_[static_cast<int>(id)].size());
  }

  /// Longest common prefix of two suffixes. Throws ContractViolation on a bad ref.
  std::uint32_t lce(SuffixRef p, SuffixRef q) const;
  /// Lexicographic comparison; equal only for identical refs.
  std::strong_ordering compare_suffixes(SuffixRef p, SuffixRef q) const;

  // Global-position interface used by the trie builder. A global position is
  // an offset into the concatenation; its suffix runs up to the next separator.
  std::uint32_t global(SuffixRef r) const;
  SuffixRef local(std::uint32_t pos) const;
  std::uint32_t total_length() const { return static_cast<std::uint32_t>(concat_.size()); }
  Symbol symbol_at(std::uint32_t pos) const { return concat_[pos]; }
  std::uint32_t rank_at(std::uint32_t pos) const { return rank_[pos]; }
  /// Symbols left before the separator that ends the text containing `pos`.
  std::uint32_t remaining(std::uint32_t pos) const;
  std::uint32_t lce_global(std::uint32_t p, std::uint32_t q) const;

  std::span<const std::uint32_t> suffix_array() const { return sa_; }

 private:
  void check(SuffixRef r) const;

  std::array<std::string, 4> texts_;
  std::array<std::uint32_t, 4> offset_{};
  std::vector<std::uint16_t> concat_;
  std::array<std::uint32_t, 4> separator_{};
  std::vector<std::uint32_t> sa_;
  std::vector<std::uint32_t> rank_;
  RangeMinimum<std::uint32_t> lcp_;  // lcp_[r] = LCP(sa_[r-1], sa_[r]), lcp_[0] = 0
};

/// Suffix array of `s` over symbols in [0, alphabet) by induced sorting.
std::vector<std::uint32_t> suffix_array(std::span<const Symbol> s, Symbol alphabet);

}  // namespace lcfk
