// Copyright 2026 The lcfk Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "lcfk/colored_trees.hpp"
#include "lcfk/errata_trie.hpp"

namespace lcfk {

/// Where a pair of modified strings came from.
struct PairOrigin {
  TextId source = TextId::X;  // X or Y
  std::uint32_t cut = 0;      // 1-based cut position in the source string
  std::uint32_t ham = 0;      // substitutions over both components
  std::uint32_t adj2 = 0;     // doubled adjusted cost over both components
};

struct PairElement {
  TerminalHandle first;
  TerminalHandle second;
  PairOrigin origin;
};

/// A set of terminal pairs drawn from one ErrataTrie.
struct PairFamily {
  std::uint64_t trie_serial = 0;
  std::vector<PairElement> elements;
};

struct MaxPairResult {
  std::uint64_t value = 0;
  std::size_t p_index = 0;  // winning element of the first family
  std::size_t q_index = 0;  // winning element of the second family
  std::uint32_t lcp_first = 0;
  std::uint32_t lcp_second = 0;
};

/// Builds the colored-trees instance: in the i-th tree every element of P
/// contributes a blue leaf under its i-th terminal and every element of Q a
/// red leaf, labelled by element position. Nodes without colored leaves are
/// dropped; with `dissolve_unary` all non-root nodes with a single child are
/// spliced out as well. Node weights are string depths.
colored::Instance build_colored_instance(const ErrataTrie& trie, const PairFamily& p, const PairFamily& q,
                                         bool dissolve_unary = true);

/// max over (P1,P2) in P, (Q1,Q2) in Q of LCP(P1,Q1) + LCP(P2,Q2), with the
/// witnessing elements. nullopt iff either family is empty. Throws
/// ContractViolation for families of a different trie or non-terminal handles.
std::optional<MaxPairResult> max_pair_lcp(const ErrataTrie& trie, const PairFamily& p, const PairFamily& q);

}  // namespace lcfk
