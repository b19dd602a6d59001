// Copyright 2026 The lcfk Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "lcfk/difference_cover.hpp"
#include "lcfk/errata_trie.hpp"
#include "lcfk/family_lcp.hpp"
#include "lcfk/text_index.hpp"

namespace lcfk {

/// A synchronized cut of X or Y at 1-based position `cut`: `left` is the
/// reversed prefix before the cut, `right` the suffix from the cut on.
struct CutPair {
  TextId source = TextId::X;
  std::uint32_t cut = 0;
  SuffixRef left;
  SuffixRef right;
};

/// One cut per cover position in [1, |source|]. `source` is X or Y.
std::vector<CutPair> pairs(const TextIndex& index, TextId source, const DifferenceCover& cover);

/// All (U1', U2') with U_i' in N(U_i) for some base cut (U1, U2), at most k
/// substitutions over both components and doubled adjusted cost at most k2.
PairFamily pairs_budgeted(const ErrataTrie& trie, std::span<const CutPair> base, int k, int k2);

enum class Status { Found, None };

/// Factor coordinates are 0-based, half-open.
struct MatchResult {
  Status status = Status::None;
  std::uint32_t length = 0;
  std::uint32_t x_begin = 0;
  std::uint32_t x_end = 0;
  std::uint32_t y_begin = 0;
  std::uint32_t y_end = 0;
  std::vector<std::uint32_t> mismatches;  // offsets within the factors
};

struct SolveOptions {
  /// Cover of period min_len to use instead of DifferenceCover::build(min_len).
  std::optional<DifferenceCover> cover;
  /// Worker threads for the independent budget-split instances.
  unsigned threads = 1;
};

/// Diagnostics of one solver run.
struct SolveReport {
  MatchResult result;
  /// Best value over all budget splits; never exceeds LCF_k(X, Y), and equals
  /// it whenever LCF_k(X, Y) >= min_len.
  std::uint64_t candidate = 0;
  /// Value of instance i: X pairs of doubled adjusted cost exactly i against
  /// Y pairs of doubled adjusted cost at most 2k - i.
  std::vector<std::uint64_t> instance_values;
  std::size_t cut_count = 0;
  std::size_t family_size = 0;
  std::size_t trie_nodes = 0;
};

SolveReport solve_report(std::string_view x, std::string_view y, int k, std::uint32_t min_len,
                         const SolveOptions& options = {});

/// LCF_k(X, Y) if it is at least min_len, otherwise Status::None.
MatchResult solve(std::string_view x, std::string_view y, int k, std::uint32_t min_len,
                  const SolveOptions& options = {});

/// Exact longest common factor of length at least min_len.
MatchResult solve_exact_zero(std::string_view x, std::string_view y, std::uint32_t min_len);

}  // namespace lcfk
