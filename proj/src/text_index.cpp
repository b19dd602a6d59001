// Copyright 2026 The lcfk Authors
// SPDX-License-Identifier: Apache-2.0

#include "lcfk/text_index.hpp"

#include <algorithm>
#include <numeric>

namespace lcfk {

namespace {

template <typename T>
std::vector<std::int32_t> naive_suffix_array(std::span<const T> s) {
  std::vector<std::int32_t> sa(s.size());
  std::iota(sa.begin(), sa.end(), 0);
  std::sort(sa.begin(), sa.end(), [&](std::int32_t a, std::int32_t b) {
    return std::lexicographical_compare(s.begin() + a, s.end(), s.begin() + b, s.end());
  });
  return sa;
}

// Induced sorting (SA-IS). Symbols must lie in [0, upper].
template <typename T>
std::vector<std::int32_t> sais(std::span<const T> s, std::int32_t upper) {
  const std::int32_t n = static_cast<std::int32_t>(s.size());
  if (n < 8) return naive_suffix_array(s);

  std::vector<std::int32_t> sa(n);
  std::vector<char> is_s(n, 0);
  for (std::int32_t i = n - 2; i >= 0; --i) {
    is_s[i] = (s[i] == s[i + 1]) ? is_s[i + 1] : (s[i] < s[i + 1]);
  }

  // Bucket starts for S-type and L-type symbols.
  std::vector<std::int32_t> start_l(upper + 2, 0), start_s(upper + 2, 0);
  for (std::int32_t i = 0; i < n; ++i) {
    if (!is_s[i]) {
      ++start_s[s[i]];
    } else {
      ++start_l[s[i] + 1];
    }
  }
  for (std::int32_t c = 0; c <= upper; ++c) {
    start_s[c] += start_l[c];
    if (c < upper) start_l[c + 1] += start_s[c];
  }

  auto induce = [&](const std::vector<std::int32_t>& lms) {
    std::fill(sa.begin(), sa.end(), -1);
    std::vector<std::int32_t> bucket(start_s.begin(), start_s.end());
    for (std::int32_t p : lms) {
      if (p == n) continue;
      sa[bucket[s[p]]++] = p;
    }
    std::copy(start_l.begin(), start_l.end(), bucket.begin());
    sa[bucket[s[n - 1]]++] = n - 1;
    // The type of sa[i] follows from the bucket region holding it, and the
    // type of its predecessor from one symbol comparison.
    for (std::int32_t i = 0; i < n; ++i) {
      const std::int32_t v = sa[i];
      if (v < 1) continue;
      const T c = s[v], p = s[v - 1];
      if (p > c || (p == c && i < start_s[c])) sa[bucket[p]++] = v - 1;
    }
    std::copy(start_l.begin(), start_l.end(), bucket.begin());
    for (std::int32_t i = n - 1; i >= 0; --i) {
      const std::int32_t v = sa[i];
      if (v < 1) continue;
      const T c = s[v], p = s[v - 1];
      if (p < c || (p == c && i >= start_s[c])) sa[--bucket[p + 1]] = v - 1;
    }
  };

  auto is_lms = [&](std::int32_t i) { return i > 0 && is_s[i] && !is_s[i - 1]; };
  std::vector<std::int32_t> lms;
  for (std::int32_t i = 1; i < n; ++i) {
    if (is_lms(i)) lms.push_back(i);
  }
  const std::int32_t m = static_cast<std::int32_t>(lms.size());
  induce(lms);
  if (m == 0) return sa;

  // Compact sorted LMS positions into sa[0, m); LMS positions are at least
  // two apart, so sa[m + p / 2] is a free slot per LMS position p.
  std::int32_t filled = 0;
  for (std::int32_t i = 0; i < n; ++i) {
    const std::int32_t v = sa[i];
    if (v > 0 && i >= start_s[s[v]] && s[v - 1] > s[v]) sa[filled++] = v;
  }
  std::fill(sa.begin() + m, sa.end(), -1);
  for (std::int32_t j = 0; j < m; ++j) {
    const std::int32_t end = (j + 1 < m) ? lms[j + 1] : n;
    sa[m + lms[j] / 2] = end - lms[j];
  }
  // Name LMS substrings; equal substrings share a name.
  std::int32_t name = 0;
  std::int32_t prev = -1, prev_len = 0;
  for (std::int32_t i = 0; i < m; ++i) {
    const std::int32_t p = sa[i];
    const std::int32_t len = sa[m + p / 2];
    const bool same = prev != -1 && len == prev_len && p + len < n && prev + len < n &&
                      std::equal(s.begin() + p, s.begin() + p + len + 1, s.begin() + prev);
    if (!same && prev != -1) ++name;
    sa[m + p / 2] = name;
    prev = p;
    prev_len = len;
  }
  std::vector<std::int32_t> reduced(m);
  for (std::int32_t j = 0; j < m; ++j) reduced[j] = sa[m + lms[j] / 2];
  std::vector<std::int32_t> sorted_lms(m);
  auto reduced_sa = sais(std::span<const std::int32_t>(reduced), name);
  for (std::int32_t i = 0; i < m; ++i) sorted_lms[i] = lms[reduced_sa[i]];
  induce(sorted_lms);
  return sa;
}

// Maps the symbols of `s` to dense codes in the same order and calls
// fn(dense, largest code) with the narrowest code type.
template <typename T, typename Fn>
void with_dense_codes(std::span<const T> s, std::size_t alphabet, Fn&& fn) {
  std::vector<std::int32_t> code(alphabet, -1);
  for (T c : s) code[c] = 0;
  std::int32_t used = 0;
  for (auto& c : code) {
    if (c == 0) c = used++;
  }
  auto run = [&]<typename U>(U) {
    std::vector<U> dense(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) dense[i] = static_cast<U>(code[s[i]]);
    fn(std::span<const U>(dense), std::max(used - 1, 0));
  };
  if (used <= 256) {
    run(std::uint8_t{});
  } else {
    run(std::uint16_t{});
  }
}

template <typename U>
std::vector<std::uint32_t> unsigned_suffix_array(std::span<const U> s, std::int32_t upper) {
  const auto sa = sais(s, upper);
  return {sa.begin(), sa.end()};
}

// Permuted LCP: computed in text order, then permuted into rank order.
// lcp[r] = LCP(sa[r-1], sa[r]) and lcp[0] = 0; also fills rank[sa[r]] = r.
template <typename U>
std::vector<std::uint32_t> lcp_array(std::span<const U> s, std::span<const std::uint32_t> sa,
                                     std::vector<std::uint32_t>& rank) {
  const std::size_t n = s.size();
  struct Entry {
    std::uint32_t rank;
    std::uint32_t plcp;
  };
  std::vector<Entry> e(n);
  for (std::size_t r = 0; r < n; ++r) {
    e[sa[r]] = {static_cast<std::uint32_t>(r), r == 0 ? 0u : sa[r - 1]};
  }
  const std::size_t first = n == 0 ? 0 : sa[0];
  std::uint32_t h = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (i == first) {
      h = 0;
      e[i].plcp = 0;
      continue;
    }
    const std::size_t j = e[i].plcp;
    while (i + h < n && j + h < n && s[i + h] == s[j + h]) ++h;
    e[i].plcp = h;
    if (h > 0) --h;
  }
  rank.resize(n);
  for (std::size_t i = 0; i < n; ++i) rank[i] = e[i].rank;
  std::vector<std::uint32_t> lcp(n, 0);
  for (std::size_t r = 1; r < n; ++r) lcp[r] = e[sa[r]].plcp;
  return lcp;
}

}  // namespace

std::vector<std::uint32_t> suffix_array(std::span<const Symbol> s, Symbol alphabet) {
  for (Symbol c : s) {
    if (c < 0 || c >= alphabet) throw ContractViolation("symbol outside the alphabet");
  }
  std::vector<std::uint32_t> sa;
  with_dense_codes(s, static_cast<std::size_t>(alphabet),
                   [&](auto dense, std::int32_t upper) { sa = unsigned_suffix_array(dense, upper); });
  return sa;
}

std::string_view text_name(TextId id) {
  switch (id) {
    case TextId::X: return "X";
    case TextId::XR: return "X^R";
    case TextId::Y: return "Y";
    case TextId::YR: return "Y^R";
  }
  return "?";
}

TextIndex::TextIndex(std::string_view x, std::string_view y) {
  check_alphabet(x, "X");
  check_alphabet(y, "Y");
  texts_[0] = std::string(x);
  texts_[1] = std::string(x.rbegin(), x.rend());
  texts_[2] = std::string(y);
  texts_[3] = std::string(y.rbegin(), y.rend());

  const std::size_t total = 2 * (x.size() + y.size()) + kSeparatorCount;
  if (total > std::size_t{0x7fffffff}) throw InputError("input too long for the index");
  concat_.reserve(total);
  for (int t = 0; t < 4; ++t) {
    offset_[t] = static_cast<std::uint32_t>(concat_.size());
    for (unsigned char c : texts_[t]) concat_.push_back(encode_byte(c));
    separator_[t] = static_cast<std::uint32_t>(concat_.size());
    concat_.push_back(static_cast<std::uint16_t>(kSeparatorCount - 1 - t));
  }

  std::vector<std::uint32_t> lcp;
  with_dense_codes(std::span<const std::uint16_t>(concat_), kAlphabetSize, [&](auto dense, std::int32_t upper) {
    sa_ = unsigned_suffix_array(dense, upper);
    lcp = lcp_array(dense, sa_, rank_);
  });
  lcp_ = RangeMinimum<std::uint32_t>(std::move(lcp));
}

void TextIndex::check(SuffixRef r) const {
  const int t = static_cast<int>(r.text);
  if (t < 0 || t > 3 || r.start > texts_[t].size()) {
    throw ContractViolation("suffix reference out of range: " + std::string(text_name(r.text)) +
                            "@" + std::to_string(r.start));
  }
}

std::uint32_t TextIndex::global(SuffixRef r) const {
  check(r);
  return offset_[static_cast<int>(r.text)] + r.start;
}

SuffixRef TextIndex::local(std::uint32_t pos) const {
  for (int t = 3; t >= 0; --t) {
    if (pos >= offset_[t]) return {static_cast<TextId>(t), pos - offset_[t]};
  }
  return {};
}

std::uint32_t TextIndex::remaining(std::uint32_t pos) const {
  for (int t = 0; t < 4; ++t) {
    if (pos <= separator_[t]) return separator_[t] - pos;
  }
  return 0;
}

std::uint32_t TextIndex::lce_global(std::uint32_t p, std::uint32_t q) const {
  if (p == q) return remaining(p);
  std::uint32_t a = rank_[p], b = rank_[q];
  if (a > b) std::swap(a, b);
  return lcp_.min(a + 1, b);
}

std::uint32_t TextIndex::lce(SuffixRef p, SuffixRef q) const {
  return lce_global(global(p), global(q));
}

std::strong_ordering TextIndex::compare_suffixes(SuffixRef p, SuffixRef q) const {
  const std::uint32_t a = global(p), b = global(q);
  if (a == b) return std::strong_ordering::equal;
  // Empty suffixes start at their separator; distinct separators keep the
  // order total even between equal strings from different texts.
  return rank_[a] <=> rank_[b];
}

}  // namespace lcfk
