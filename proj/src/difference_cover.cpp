// Copyright 2026 The lcfk Authors
// SPDX-License-Identifier: Apache-2.0

#include "lcfk/difference_cover.hpp"

#include <algorithm>

#include "lcfk/symbols.hpp"

namespace lcfk {

DifferenceCover DifferenceCover::build(std::uint32_t d) {
  if (d == 0) throw InputError("difference cover period must be positive");
  std::uint32_t t = 1;
  while (std::uint64_t{t} * t < d) ++t;
  std::vector<std::uint32_t> residues;
  for (std::uint32_t q = 0; q <= t; ++q) residues.push_back(static_cast<std::uint32_t>((std::uint64_t{q} * t) % d));
  // The dense run sits at the top of the period so that short prefixes
  // [1, n] only meet the sparse multiples of t.
  for (std::uint32_t r = 0; r < t; ++r) residues.push_back((d - t + r) % d);
  return DifferenceCover(d, std::move(residues));
}

DifferenceCover DifferenceCover::from_residues(std::uint32_t d, std::vector<std::uint32_t> residues) {
  if (d == 0) throw InputError("difference cover period must be positive");
  for (auto r : residues) {
    if (r >= d) throw InputError("residue " + std::to_string(r) + " not below period " + std::to_string(d));
  }
  DifferenceCover cover(d, std::move(residues));
  for (std::uint32_t delta = 0; delta < d; ++delta) {
    if (cover.delta_begin_[delta] == cover.delta_begin_[delta + 1]) {
      throw InputError("residues do not cover difference " + std::to_string(delta) + " mod " +
                       std::to_string(d));
    }
  }
  return cover;
}

DifferenceCover::DifferenceCover(std::uint32_t d, std::vector<std::uint32_t> residues)
    : d_(d), residues_(std::move(residues)) {
  std::sort(residues_.begin(), residues_.end());
  residues_.erase(std::unique(residues_.begin(), residues_.end()), residues_.end());
  member_.assign(d_, 0);
  for (auto r : residues_) member_[r] = 1;

  std::vector<std::uint32_t> count(d_ + 1, 0);
  for (auto a : residues_) {
    for (auto b : residues_) ++count[(b + d_ - a) % d_];
  }
  delta_begin_.assign(d_ + 1, 0);
  for (std::uint32_t delta = 0; delta < d_; ++delta) delta_begin_[delta + 1] = delta_begin_[delta] + count[delta];
  delta_anchor_.resize(delta_begin_[d_]);
  std::vector<std::uint32_t> fill(delta_begin_.begin(), delta_begin_.end() - 1);
  // residues_ is sorted, so every per-delta list comes out sorted.
  for (auto a : residues_) {
    for (auto b : residues_) delta_anchor_[fill[(b + d_ - a) % d_]++] = a;
  }
}

bool DifferenceCover::contains(std::uint64_t position) const {
  return position >= 1 && member_[position % d_];
}

std::uint32_t DifferenceCover::shift(std::uint64_t i, std::uint64_t j) const {
  const auto ri = static_cast<std::uint32_t>(i % d_);
  const auto delta = static_cast<std::uint32_t>((j % d_ + d_ - ri) % d_);
  const auto first = delta_anchor_.begin() + delta_begin_[delta];
  const auto last = delta_anchor_.begin() + delta_begin_[delta + 1];
  // The first anchor at or cyclically after i mod d gives the smallest shift.
  auto it = std::lower_bound(first, last, ri);
  const std::uint32_t anchor = (it != last) ? *it : *first;
  return (anchor + d_ - ri) % d_;
}

std::vector<std::uint32_t> DifferenceCover::enumerate(std::uint32_t n) const {
  std::vector<std::uint32_t> out;
  for (std::uint64_t base = 0; base <= n; base += d_) {
    for (auto r : residues_) {
      const std::uint64_t p = base + r;
      if (p == 0) continue;
      if (p > n) break;
      out.push_back(static_cast<std::uint32_t>(p));
    }
  }
  return out;
}

}  // namespace lcfk
