// Copyright 2026 The lcfk Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "lcfk/range_min.hpp"
#include "lcfk/symbols.hpp"
#include "lcfk/text_index.hpp"

namespace lcfk {

/// One substituted position of a modified string, relative to the start of
/// its base suffix. `symbol` is either an input symbol or kWildcard.
struct EditOp {
  std::uint32_t offset = 0;
  Symbol symbol = 0;

  friend bool operator==(const EditOp&, const EditOp&) = default;
};

/// A member F' of N(F): the base suffix F with a few substitutions.
struct ModifiedString {
  SuffixRef base;
  std::vector<EditOp> edits;  // sorted by offset
  std::uint32_t ham = 0;      // d_H(F, F')
  std::uint32_t dollars = 0;  // number of wildcards in F'

  /// Doubled adjusted cost 2 d_H(F, F') - #$(F').
  std::uint32_t adj2() const { return 2 * ham - dollars; }
};

/// Terminal node of an ErrataTrie.
struct TerminalHandle {
  std::uint32_t node = 0;

  friend auto operator<=>(const TerminalHandle&, const TerminalHandle&) = default;
};

/// Records that the string spelled by `node` belongs to N(family member).
struct Membership {
  std::uint32_t node = 0;
  std::uint32_t family = 0;  // index into ErrataTrie::family()
  std::uint32_t ham = 0;
  std::uint32_t dollars = 0;
  std::int32_t edit_chain = -1;

  std::uint32_t adj2() const { return 2 * ham - dollars; }
  TerminalHandle terminal() const { return {node}; }
};

/// Compacted trie of all modified strings of a k-complete family N(F).
///
/// Built by the recursive heavy-symbol procedure: at every branching node the
/// most frequent next symbol h is kept for free, and each string continuing
/// with another symbol is additionally sent, at the price of one unit of its
/// budget, down the h branch and down a wildcard branch. A string therefore
/// accumulates at most k substitutions, and each N(F) holds only
/// O(2^d log^d |F|) strings with d substitutions.
///
/// Edge labels are an explicit first symbol (possibly the wildcard) followed
/// by a factor of one indexed text. Node weights are string depths, so the
/// weight of the lowest common ancestor of two terminals is the LCP of the
/// strings they spell. The trie keeps a pointer to its TextIndex, which must
/// outlive it. Immutable after construction.
class ErrataTrie {
 public:
  struct Node {
    std::uint32_t depth = 0;
    std::int32_t parent = -1;
    Symbol first_symbol = -1;   // first symbol of the incoming edge label
    std::uint32_t tail = 0;     // global text position of label symbols 2..
    std::uint32_t subtree_end = 0;  // node ids are in preorder; the subtree is [id, subtree_end)
    std::uint32_t member_begin = 0;  // memberships stored at this node
    std::uint32_t member_end = 0;
  };

  /// Runs the construction for the given family (deduplicated and sorted
  /// internally) with substitution budget k.
  static ErrataTrie generate(std::span<const SuffixRef> family, int k, const TextIndex& index);

  int k() const { return k_; }
  std::uint64_t serial() const { return serial_; }
  const TextIndex& index() const { return *index_; }

  std::span<const SuffixRef> family() const { return family_; }
  /// Position of F in family(); throws ContractViolation if absent.
  std::uint32_t family_index(SuffixRef f) const;

  std::span<const Node> nodes() const { return nodes_; }
  const Node& node(std::uint32_t id) const { return nodes_.at(id); }
  std::uint32_t root() const { return 0; }
  std::size_t terminal_count() const;

  /// N(F) as memberships, ordered by terminal preorder.
  std::span<const Membership> members(std::uint32_t family_idx) const;
  std::span<const Membership> members(SuffixRef f) const { return members(family_index(f)); }
  /// Every membership stored at a terminal node.
  std::span<const Membership> members_at(std::uint32_t node) const;

  /// N_{d,adj2/2}(F): members with at most d substitutions and doubled
  /// adjusted cost at most adj2.
  std::vector<TerminalHandle> n_subset(SuffixRef f, int d, int adj2) const;

  /// Length of the longest common prefix of the strings spelled by two terminals.
  std::uint32_t lcp_terminals(TerminalHandle a, TerminalHandle b) const;

  /// max LCP(F1', F2') over F_i' in N_{d, d_i}(F_i) with d_1 + d_2 = d.
  std::uint32_t lcp_d(SuffixRef f1, SuffixRef f2, int d) const;

  ModifiedString modified_string(const Membership& m) const;
  /// Applies a membership's edits to its base suffix; wildcards render as '$'.
  std::string materialize(const Membership& m) const;
  /// String spelled by the root-to-node path.
  std::string spell(std::uint32_t node) const;

  // Tree navigation for reductions built on top of the trie.
  std::uint32_t preorder(std::uint32_t node) const { return node; }
  bool is_ancestor(std::uint32_t a, std::uint32_t b) const { return a <= b && b < nodes_[a].subtree_end; }
  /// Children in ascending first-symbol order, wildcard last.
  std::vector<std::uint32_t> children(std::uint32_t node) const;
  std::uint32_t lca(std::uint32_t a, std::uint32_t b) const;

  /// Deterministic text rendering: one line per node with depth, edge label
  /// and terminal memberships.
  std::string dump() const;

 private:
  ErrataTrie() = default;
  void check_terminal(TerminalHandle t) const;
  void finish();

  friend class ErrataBuilder;

  int k_ = 0;
  std::uint64_t serial_ = 0;
  const TextIndex* index_ = nullptr;
  std::vector<SuffixRef> family_;
  std::vector<Node> nodes_;
  std::vector<Membership> memberships_;       // grouped by node
  std::vector<Membership> family_members_;    // copies grouped by family
  std::vector<std::uint32_t> family_begin_;   // CSR offsets into family_members_
  struct EditLink {
    std::int32_t parent;
    std::uint32_t offset;
    Symbol symbol;
  };
  std::vector<EditLink> edits_;
  RangeMinimum<std::uint32_t> level_;  // edge count from the root, by node id
};

}  // namespace lcfk
