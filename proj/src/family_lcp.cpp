// Copyright 2026 The lcfk Authors
// SPDX-License-Identifier: Apache-2.0

#include "lcfk/family_lcp.hpp"

#include <algorithm>
#include <string>

namespace lcfk {

namespace {

constexpr std::uint32_t kAbsent = 0xffffffffu;

void check_family(const ErrataTrie& trie, const PairFamily& f) {
  if (f.trie_serial != trie.serial()) throw ContractViolation("pair family belongs to a different trie");
  for (const auto& e : f.elements) {
    for (TerminalHandle t : {e.first, e.second}) {
      if (t.node >= trie.nodes().size() || trie.members_at(t.node).empty()) {
        throw ContractViolation("pair family holds a non-terminal node " + std::to_string(t.node));
      }
    }
  }
}

TerminalHandle component(const PairElement& e, int which) { return which == 0 ? e.first : e.second; }

// One side of the instance over the trie nodes carrying leaves, in trie
// preorder. Without dissolution the kept nodes are all ancestors of marked
// terminals; with it, the marked terminals closed under pairwise LCA.
colored::Tree build_tree(const ErrataTrie& trie, const PairFamily& p, const PairFamily& q, int which,
                         bool dissolve_unary) {
  const std::size_t trie_size = trie.nodes().size();
  // Trie node ids are a preorder, so kept nodes are collected by marking.
  std::vector<char> marked(trie_size, 0);
  marked[trie.root()] = 1;
  for (const auto& e : p.elements) marked[component(e, which).node] = 1;
  for (const auto& e : q.elements) marked[component(e, which).node] = 1;
  std::vector<std::uint32_t> kept;
  for (std::uint32_t v = 0; v < trie_size; ++v) {
    if (marked[v]) kept.push_back(v);
  }
  if (dissolve_unary) {
    for (std::size_t i = 1; i < kept.size(); ++i) marked[trie.lca(kept[i - 1], kept[i])] = 1;
  } else {
    for (std::uint32_t v : kept) {
      for (std::int32_t u = trie.node(v).parent; u != -1 && !marked[u]; u = trie.node(u).parent) marked[u] = 1;
    }
  }
  kept.clear();
  for (std::uint32_t v = 0; v < trie_size; ++v) {
    if (marked[v]) kept.push_back(v);
  }

  // Parent links among kept nodes via a stack of the current root path.
  const std::size_t n = kept.size();
  std::vector<std::uint32_t> slot(trie_size, kAbsent);
  for (std::size_t i = 0; i < n; ++i) slot[kept[i]] = static_cast<std::uint32_t>(i);
  std::vector<std::int32_t> parent(n, -1);
  std::vector<std::uint32_t> path;
  for (std::size_t i = 0; i < n; ++i) {
    while (!path.empty() && !trie.is_ancestor(kept[path.back()], kept[i])) path.pop_back();
    parent[i] = path.empty() ? -1 : static_cast<std::int32_t>(path.back());
    path.push_back(static_cast<std::uint32_t>(i));
  }

  std::vector<std::uint32_t> children(n, 0);
  for (std::size_t i = 1; i < n; ++i) ++children[parent[i]];
  for (const auto& e : p.elements) ++children[slot[component(e, which).node]];
  for (const auto& e : q.elements) ++children[slot[component(e, which).node]];

  // Splice out unary nodes; `target` maps a kept slot to the tree node that
  // takes its place.
  colored::Tree tree(trie.node(kept[0]).depth);
  tree.nodes.reserve(n + p.elements.size() + q.elements.size());
  std::vector<std::uint32_t> target(n, 0);
  for (std::size_t i = 1; i < n; ++i) {
    const std::uint32_t up = target[parent[i]];
    if (dissolve_unary && children[i] == 1) {
      target[i] = up;
    } else {
      target[i] = tree.add_node(up, trie.node(kept[i]).depth);
    }
  }
  for (std::size_t i = 0; i < p.elements.size(); ++i) {
    const std::uint32_t host = component(p.elements[i], which).node;
    tree.add_leaf(target[slot[host]], colored::Color::Blue, static_cast<std::uint32_t>(i), trie.node(host).depth);
  }
  for (std::size_t i = 0; i < q.elements.size(); ++i) {
    const std::uint32_t host = component(q.elements[i], which).node;
    tree.add_leaf(target[slot[host]], colored::Color::Red, static_cast<std::uint32_t>(i), trie.node(host).depth);
  }
  return tree;
}

}  // namespace

colored::Instance build_colored_instance(const ErrataTrie& trie, const PairFamily& p, const PairFamily& q,
                                         bool dissolve_unary) {
  check_family(trie, p);
  check_family(trie, q);
  return {build_tree(trie, p, q, 0, dissolve_unary), build_tree(trie, p, q, 1, dissolve_unary)};
}

std::optional<MaxPairResult> max_pair_lcp(const ErrataTrie& trie, const PairFamily& p, const PairFamily& q) {
  check_family(trie, p);
  check_family(trie, q);
  if (p.elements.empty() || q.elements.empty()) return std::nullopt;
  const colored::Instance instance = build_colored_instance(trie, p, q);
  const auto answer = colored::solve(instance);
  if (!answer) return std::nullopt;

  MaxPairResult out;
  out.p_index = answer->blue_label;
  out.q_index = answer->red_label;
  const PairElement& a = p.elements[out.p_index];
  const PairElement& b = q.elements[out.q_index];
  out.lcp_first = trie.lcp_terminals(a.first, b.first);
  out.lcp_second = trie.lcp_terminals(a.second, b.second);
  out.value = std::uint64_t{out.lcp_first} + out.lcp_second;
  if (out.value != static_cast<std::uint64_t>(answer->value)) {
    throw std::logic_error("colored-trees value disagrees with its witness LCPs");
  }
  return out;
}

}  // namespace lcfk
