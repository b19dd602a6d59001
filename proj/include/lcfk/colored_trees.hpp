// Copyright 2026 The lcfk Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "lcfk/range_min.hpp"

namespace lcfk::colored {

enum class Color : std::uint8_t { None, Blue, Red };

struct Node {
  std::int32_t parent = -1;
  std::int64_t weight = 0;
  Color color = Color::None;
  std::uint32_t label = 0;  // meaningful for colored leaves only
};

/// Rooted weighted tree whose colored nodes are numbered leaves. Node 0 is the
/// root and every other node's parent has a smaller id.
struct Tree {
  std::vector<Node> nodes;

  Tree() { nodes.push_back({}); }
  explicit Tree(std::int64_t root_weight) { nodes.push_back({-1, root_weight, Color::None, 0}); }

  std::uint32_t add_node(std::uint32_t parent, std::int64_t weight) {
    nodes.push_back({static_cast<std::int32_t>(parent), weight, Color::None, 0});
    return static_cast<std::uint32_t>(nodes.size() - 1);
  }
  std::uint32_t add_leaf(std::uint32_t parent, Color color, std::uint32_t label, std::int64_t weight) {
    nodes.push_back({static_cast<std::int32_t>(parent), weight, color, label});
    return static_cast<std::uint32_t>(nodes.size() - 1);
  }
  std::size_t size() const { return nodes.size(); }
};

struct Instance {
  Tree first;
  Tree second;

  /// Throws InputError on weight inversions, colored internal nodes, bad
  /// parent links, or a repeated label within one color of one tree.
  void validate() const;
};

struct Answer {
  std::uint32_t v1 = 0;  // node of the first tree
  std::uint32_t v2 = 0;  // node of the second tree
  std::int64_t value = 0;
  std::uint32_t blue_label = 0;
  std::uint32_t red_label = 0;
};

/// Lowest common ancestors by range minima over preorder levels.
class LcaIndex {
 public:
  explicit LcaIndex(const Tree& tree);
  std::uint32_t lca(std::uint32_t a, std::uint32_t b) const { return lca_at_preorder(preorder_[a], preorder_[b]); }
  /// Lowest common ancestor of the nodes at two preorder positions.
  std::uint32_t lca_at_preorder(std::uint32_t pa, std::uint32_t pb) const;
  std::uint32_t preorder(std::uint32_t v) const { return preorder_[v]; }
  std::uint32_t at_preorder(std::uint32_t p) const { return by_preorder_[p]; }

 private:
  std::vector<std::uint32_t> preorder_;
  std::vector<std::uint32_t> by_preorder_;
  std::vector<std::uint32_t> end_;     // by preorder: one past the subtree
  std::vector<std::uint32_t> parent_;  // by preorder: parent node
  RangeMinimum<std::uint32_t> level_;  // by preorder
};

/// Maximum w(v1) + w(v2) over node pairs whose subtrees share a blue label
/// and a red label, by small-to-large merging over the first tree with
/// predecessor/successor probes in the second tree's preorder. O(m log^2 m).
/// Returns nullopt when no blue and red label both occur in both trees.
std::optional<Answer> solve(const Instance& instance);

/// Reference answer: every (blue, red) label pair evaluated at its two LCAs
/// found by walking parent links.
std::optional<Answer> brute_solve(const Instance& instance);

}  // namespace lcfk::colored
