// Copyright 2026 The lcfk Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace lcfk {

/// A periodic d-cover: positive integers whose residue mod d lies in a fixed
/// residue set D such that every difference mod d is a difference of two
/// members of D. For any i, j >= 1 the shift h(i, j) in [0, d) puts both i + h
/// and j + h in the cover.
///
/// Positions are 1-based throughout, matching the cut positions of the solver.
class DifferenceCover {
 public:
  /// Two-scale construction with t = ceil(sqrt(d)) residues at every multiple
  /// of t plus a run of t consecutive residues at the top of the period.
  static DifferenceCover build(std::uint32_t d);

  /// Cover from an explicit residue set; throws InputError unless the
  /// residues form a difference cover modulo d.
  static DifferenceCover from_residues(std::uint32_t d, std::vector<std::uint32_t> residues);

  std::uint32_t period() const { return d_; }
  std::span<const std::uint32_t> residues() const { return residues_; }

  bool contains(std::uint64_t position) const;

  /// Smallest s in [0, d) with i + s and j + s both in the cover.
  std::uint32_t shift(std::uint64_t i, std::uint64_t j) const;

  /// Cover members in [1, n], increasing.
  std::vector<std::uint32_t> enumerate(std::uint32_t n) const;

 private:
  DifferenceCover(std::uint32_t d, std::vector<std::uint32_t> residues);

  std::uint32_t d_ = 1;
  std::vector<std::uint32_t> residues_;  // sorted, distinct, < d
  std::vector<char> member_;             // indexed by residue
  // For each difference delta = (j - i) mod d, the sorted residues a with
  // a and a + delta both in D, stored as a CSR table.
  std::vector<std::uint32_t> delta_begin_;
  std::vector<std::uint32_t> delta_anchor_;
};

}  // namespace lcfk
