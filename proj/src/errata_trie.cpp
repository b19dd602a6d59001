// Copyright 2026 The lcfk Authors
// SPDX-License-Identifier: Apache-2.0

#include "lcfk/errata_trie.hpp"

#include <algorithm>
#include <atomic>
#include <random>
#include <sstream>
#include <stdexcept>
#include <tuple>
#include <utility>

namespace lcfk {

namespace {

std::atomic<std::uint64_t> next_serial{1};

constexpr std::int32_t kNil = -1;

}  // namespace

/// Drives the recursive construction with an explicit work stack.
///
/// A tuple (S, F, b) is stored as its family member F (global start), budget
/// b, wildcard count and edit chain; S is implicit as the text suffix at
/// F + depth of the set that holds it. Each live set is a treap ordered by
/// the rank of S, so a set splits into first-symbol groups by key and the
/// common prefix of the whole set is one LCE query between its extremes.
class ErrataBuilder {
 public:
  ErrataBuilder(ErrataTrie& trie, const TextIndex& index) : trie_(trie), index_(index), rng_(0x5eed1234u) {}

  void run(int k) {
    std::int32_t root = kNil;
    for (std::uint32_t f = 0; f < trie_.family_.size(); ++f) {
      const std::int32_t item = make_item(index_.global(trie_.family_[f]), f, k, 0, kNil);
      root = insert(root, item, 0);
    }
    stack_.push_back({root, 0, kNil, -1});
    while (!stack_.empty()) {
      Work w = stack_.back();
      stack_.pop_back();
      process(w, k);
    }
  }

 private:
  struct Item {
    std::uint32_t fstart;
    std::uint32_t family;
    std::int32_t budget;
    std::int32_t dollars;
    std::int32_t edits;
    std::uint32_t priority;
    std::int32_t left = kNil;
    std::int32_t right = kNil;
    std::uint32_t size = 1;
    std::uint32_t key_depth = 0xffffffffu;  // depth of the cached key
    std::uint32_t key = 0;
  };

  struct Work {
    std::int32_t set;
    std::uint32_t depth;
    std::int32_t parent;
    Symbol first_symbol;
  };

  std::int32_t make_item(std::uint32_t fstart, std::uint32_t family, std::int32_t budget, std::int32_t dollars,
                         std::int32_t edits) {
    items_.push_back({fstart, family, budget, dollars, edits, static_cast<std::uint32_t>(rng_())});
    return static_cast<std::int32_t>(items_.size() - 1);
  }

  std::uint32_t size(std::int32_t t) const { return t == kNil ? 0 : items_[t].size; }
  void pull(std::int32_t t) { items_[t].size = 1 + size(items_[t].left) + size(items_[t].right); }
  std::uint32_t key(std::int32_t t, std::uint32_t depth) {
    Item& it = items_[t];
    if (it.key_depth != depth) {
      it.key_depth = depth;
      it.key = index_.rank_at(it.fstart + depth);
    }
    return it.key;
  }
  Symbol head(std::int32_t t, std::uint32_t depth) const { return index_.symbol_at(items_[t].fstart + depth); }

  std::int32_t merge(std::int32_t a, std::int32_t b) {
    if (a == kNil) return b;
    if (b == kNil) return a;
    if (items_[a].priority > items_[b].priority) {
      items_[a].right = merge(items_[a].right, b);
      pull(a);
      return a;
    }
    items_[b].left = merge(a, items_[b].left);
    pull(b);
    return b;
  }

  // Splits into (head <= c, head > c). Heads are non-decreasing in key order.
  std::pair<std::int32_t, std::int32_t> split_head(std::int32_t t, std::uint32_t depth, Symbol c) {
    if (t == kNil) return {kNil, kNil};
    if (head(t, depth) <= c) {
      auto [l, r] = split_head(items_[t].right, depth, c);
      items_[t].right = l;
      pull(t);
      return {t, r};
    }
    auto [l, r] = split_head(items_[t].left, depth, c);
    items_[t].left = r;
    pull(t);
    return {l, t};
  }

  // Splits into (key < k, key >= k).
  std::pair<std::int32_t, std::int32_t> split_key(std::int32_t t, std::uint32_t depth, std::uint32_t k) {
    if (t == kNil) return {kNil, kNil};
    if (key(t, depth) < k) {
      auto [l, r] = split_key(items_[t].right, depth, k);
      items_[t].right = l;
      pull(t);
      return {t, r};
    }
    auto [l, r] = split_key(items_[t].left, depth, k);
    items_[t].left = r;
    pull(t);
    return {l, t};
  }

  std::int32_t insert(std::int32_t root, std::int32_t item, std::uint32_t depth) {
    auto [l, r] = split_key(root, depth, key(item, depth));
    return merge(merge(l, item), r);
  }

  std::int32_t leftmost(std::int32_t t) const {
    while (items_[t].left != kNil) t = items_[t].left;
    return t;
  }
  std::int32_t rightmost(std::int32_t t) const {
    while (items_[t].right != kNil) t = items_[t].right;
    return t;
  }

  template <typename Fn>
  void for_each(std::int32_t t, Fn&& fn) const {
    if (t == kNil) return;
    for_each(items_[t].left, fn);
    fn(t);
    for_each(items_[t].right, fn);
  }

  std::int32_t add_edit(std::int32_t chain, std::uint32_t offset, Symbol symbol) {
    trie_.edits_.push_back({chain, offset, symbol});
    return static_cast<std::int32_t>(trie_.edits_.size() - 1);
  }

  void process(Work w, int k) {
    std::int32_t set = w.set;
    std::uint32_t depth = w.depth;
    std::int32_t ended = kNil;
    // Follow the compacted edge: while no string ends here and all remaining
    // strings share a prefix, skip over it. The root always stays at depth 0.
    if (w.parent == kNil) {
      std::tie(ended, set) = split_head(set, depth, kSeparatorCount - 1);
    }
    while (w.parent != kNil) {
      auto [e, rest] = split_head(set, depth, kSeparatorCount - 1);
      ended = e;
      set = rest;
      if (ended != kNil || set == kNil) break;
      const std::uint32_t lo = items_[leftmost(set)].fstart + depth;
      const std::uint32_t hi = items_[rightmost(set)].fstart + depth;
      const std::uint32_t common = index_.lce_global(lo, hi);
      if (common == 0) break;
      depth += common;
    }

    const auto node_id = static_cast<std::uint32_t>(trie_.nodes_.size());
    ErrataTrie::Node node;
    node.depth = depth;
    node.parent = w.parent;
    node.first_symbol = w.first_symbol;
    if (w.parent != kNil) {
      const std::int32_t rep = ended != kNil ? ended : set;
      node.tail = items_[rep].fstart + trie_.nodes_[w.parent].depth + 1;
    }
    node.member_begin = static_cast<std::uint32_t>(trie_.memberships_.size());
    for_each(ended, [&](std::int32_t t) {
      const Item& it = items_[t];
      trie_.memberships_.push_back({node_id, it.family, static_cast<std::uint32_t>(k - it.budget),
                                    static_cast<std::uint32_t>(it.dollars), it.edits});
    });
    node.member_end = static_cast<std::uint32_t>(trie_.memberships_.size());
    trie_.nodes_.push_back(std::move(node));
    if (set == kNil) return;

    // Partition by first symbol; ties for the heavy symbol go to the smallest.
    auto& groups = groups_;
    groups.clear();
    while (set != kNil) {
      const Symbol c = head(leftmost(set), depth);
      auto [g, rest] = split_head(set, depth, c);
      groups.emplace_back(c, g);
      set = rest;
    }
    std::size_t heavy = 0;
    for (std::size_t i = 1; i < groups.size(); ++i) {
      if (size(groups[i].second) > size(groups[heavy].second)) heavy = i;
    }
    const Symbol h = groups[heavy].first;
    std::int32_t heavy_set = groups[heavy].second;
    std::int32_t wildcard_set = kNil;
    for (std::size_t i = 0; i < groups.size(); ++i) {
      if (i == heavy) continue;
      auto& light = light_;
      light.clear();
      for_each(groups[i].second, [&](std::int32_t t) {
        if (items_[t].budget > 0) light.push_back(t);
      });
      for (std::int32_t t : light) {
        const Item src = items_[t];
        const std::int32_t to_heavy =
            make_item(src.fstart, src.family, src.budget - 1, src.dollars, add_edit(src.edits, depth, h));
        heavy_set = insert(heavy_set, to_heavy, depth + 1);
        const std::int32_t to_wild =
            make_item(src.fstart, src.family, src.budget - 1, src.dollars + 1, add_edit(src.edits, depth, kWildcard));
        wildcard_set = insert(wildcard_set, to_wild, depth + 1);
      }
    }
    groups[heavy].second = heavy_set;

    // Children are created in ascending symbol order, wildcard last.
    if (wildcard_set != kNil) {
      stack_.push_back({wildcard_set, depth + 1, static_cast<std::int32_t>(node_id), kWildcard});
    }
    for (auto it = groups.rbegin(); it != groups.rend(); ++it) {
      stack_.push_back({it->second, depth + 1, static_cast<std::int32_t>(node_id), it->first});
    }
  }

  ErrataTrie& trie_;
  const TextIndex& index_;
  std::mt19937 rng_;
  std::vector<Item> items_;
  std::vector<Work> stack_;
  std::vector<std::pair<Symbol, std::int32_t>> groups_;
  std::vector<std::int32_t> light_;
};

ErrataTrie ErrataTrie::generate(std::span<const SuffixRef> family, int k, const TextIndex& index) {
  if (k < 0) throw InputError("mismatch budget k must be non-negative");
  if (family.empty()) throw InputError("errata trie needs a non-empty family");
  ErrataTrie trie;
  trie.k_ = k;
  trie.serial_ = next_serial.fetch_add(1);
  trie.index_ = &index;
  trie.family_.assign(family.begin(), family.end());
  std::sort(trie.family_.begin(), trie.family_.end());
  trie.family_.erase(std::unique(trie.family_.begin(), trie.family_.end()), trie.family_.end());
  for (auto f : trie.family_) index.global(f);  // validates every ref

  ErrataBuilder builder(trie, index);
  builder.run(k);
  trie.finish();
  return trie;
}

void ErrataTrie::finish() {
  // Node ids are a preorder: each node's parent is on the current root path.
  const auto n = static_cast<std::uint32_t>(nodes_.size());
  std::vector<std::uint32_t> path{0};
  std::vector<std::uint32_t> level(n, 0);
  for (std::uint32_t v = 0; v < n; ++v) {
    if (v == 0) continue;
    level[v] = level[nodes_[v].parent] + 1;
    while (!path.empty() && static_cast<std::int32_t>(path.back()) != nodes_[v].parent) {
      nodes_[path.back()].subtree_end = v;
      path.pop_back();
    }
    if (path.empty()) throw std::logic_error("errata trie nodes are not in preorder");
    path.push_back(v);
  }
  for (std::uint32_t v : path) nodes_[v].subtree_end = n;
  level_ = RangeMinimum<std::uint32_t>(std::move(level));

  // N(F) lists, each ordered by terminal preorder.
  family_begin_.assign(family_.size() + 1, 0);
  for (const auto& m : memberships_) ++family_begin_[m.family + 1];
  for (std::size_t f = 0; f < family_.size(); ++f) family_begin_[f + 1] += family_begin_[f];
  family_members_.resize(memberships_.size());
  std::vector<std::uint32_t> fill(family_begin_.begin(), family_begin_.end() - 1);
  for (const auto& m : memberships_) family_members_[fill[m.family]++] = m;
  for (std::size_t f = 0; f < family_.size(); ++f) {
    std::sort(family_members_.begin() + family_begin_[f], family_members_.begin() + family_begin_[f + 1],
              [](const Membership& a, const Membership& b) { return a.node < b.node; });
  }
}

std::uint32_t ErrataTrie::family_index(SuffixRef f) const {
  auto it = std::lower_bound(family_.begin(), family_.end(), f);
  if (it == family_.end() || *it != f) {
    throw ContractViolation("suffix " + std::string(text_name(f.text)) + "@" + std::to_string(f.start) +
                            " is not in the trie family");
  }
  return static_cast<std::uint32_t>(it - family_.begin());
}

std::size_t ErrataTrie::terminal_count() const {
  return static_cast<std::size_t>(
      std::count_if(nodes_.begin(), nodes_.end(), [](const Node& v) { return v.member_end > v.member_begin; }));
}

std::span<const Membership> ErrataTrie::members(std::uint32_t family_idx) const {
  if (family_idx >= family_.size()) throw ContractViolation("family index out of range");
  return std::span<const Membership>(family_members_).subspan(family_begin_[family_idx],
                                                              family_begin_[family_idx + 1] - family_begin_[family_idx]);
}

std::span<const Membership> ErrataTrie::members_at(std::uint32_t node) const {
  const Node& v = nodes_.at(node);
  return std::span<const Membership>(memberships_).subspan(v.member_begin, v.member_end - v.member_begin);
}

std::vector<TerminalHandle> ErrataTrie::n_subset(SuffixRef f, int d, int adj2) const {
  std::vector<TerminalHandle> out;
  for (const auto& m : members(f)) {
    if (static_cast<int>(m.ham) <= d && static_cast<int>(m.adj2()) <= adj2) out.push_back(m.terminal());
  }
  return out;
}

void ErrataTrie::check_terminal(TerminalHandle t) const {
  if (t.node >= nodes_.size() || nodes_[t.node].member_end == nodes_[t.node].member_begin) {
    throw ContractViolation("not a terminal of this trie: node " + std::to_string(t.node));
  }
}

std::vector<std::uint32_t> ErrataTrie::children(std::uint32_t node) const {
  std::vector<std::uint32_t> out;
  const std::uint32_t end = nodes_.at(node).subtree_end;
  for (std::uint32_t c = node + 1; c < end; c = nodes_[c].subtree_end) out.push_back(c);
  return out;
}

std::uint32_t ErrataTrie::lca(std::uint32_t a, std::uint32_t b) const {
  if (a >= nodes_.size() || b >= nodes_.size()) throw ContractViolation("trie node out of range");
  if (a > b) std::swap(a, b);
  if (is_ancestor(a, b)) return a;
  // The shallowest node after a and up to b is a child of the ancestor.
  return static_cast<std::uint32_t>(nodes_[level_.argmin(a + 1, b)].parent);
}

std::uint32_t ErrataTrie::lcp_terminals(TerminalHandle a, TerminalHandle b) const {
  check_terminal(a);
  check_terminal(b);
  return nodes_[lca(a.node, b.node)].depth;
}

std::uint32_t ErrataTrie::lcp_d(SuffixRef f1, SuffixRef f2, int d) const {
  std::uint32_t best = 0;
  const auto n1 = members(f1);
  const auto n2 = members(f2);
  for (const auto& a : n1) {
    if (static_cast<int>(a.ham) > d) continue;
    for (const auto& b : n2) {
      if (static_cast<int>(b.ham) > d || static_cast<int>(a.adj2() + b.adj2()) > 2 * d) continue;
      best = std::max(best, nodes_[lca(a.node, b.node)].depth);
    }
  }
  return best;
}

ModifiedString ErrataTrie::modified_string(const Membership& m) const {
  ModifiedString out;
  out.base = family_.at(m.family);
  out.ham = m.ham;
  out.dollars = m.dollars;
  for (std::int32_t e = m.edit_chain; e != -1; e = edits_[e].parent) {
    out.edits.push_back({edits_[e].offset, edits_[e].symbol});
  }
  std::reverse(out.edits.begin(), out.edits.end());
  return out;
}

std::string ErrataTrie::materialize(const Membership& m) const {
  const ModifiedString ms = modified_string(m);
  std::string s(index_->text(ms.base.text).substr(ms.base.start));
  for (const auto& e : ms.edits) s[e.offset] = render_symbol(e.symbol);
  return s;
}

std::string ErrataTrie::spell(std::uint32_t node) const {
  std::string out;
  for (std::int32_t v = static_cast<std::int32_t>(node); nodes_.at(v).parent != -1; v = nodes_[v].parent) {
    const Node& x = nodes_[v];
    const std::uint32_t len = x.depth - nodes_[x.parent].depth;
    for (std::uint32_t i = len; i-- > 1;) out.push_back(render_symbol(index_->symbol_at(x.tail + i - 1)));
    out.push_back(render_symbol(x.first_symbol));
  }
  std::reverse(out.begin(), out.end());
  return out;
}

std::string ErrataTrie::dump() const {
  std::ostringstream os;
  os << "errata-trie k=" << k_ << " family=" << family_.size() << " nodes=" << nodes_.size() << '\n';
  std::vector<std::pair<std::uint32_t, int>> stack{{0u, 0}};
  while (!stack.empty()) {
    auto [v, indent] = stack.back();
    stack.pop_back();
    const Node& x = nodes_[v];
    os << std::string(2 * indent, ' ') << '[' << x.depth << ']';
    if (x.parent != -1) {
      const std::uint32_t len = x.depth - nodes_[x.parent].depth;
      os << ' ' << render_symbol(x.first_symbol);
      for (std::uint32_t i = 1; i < len; ++i) os << render_symbol(index_->symbol_at(x.tail + i - 1));
    }
    for (const auto& m : members_at(v)) {
      const SuffixRef f = family_[m.family];
      os << " {" << text_name(f.text) << '@' << f.start << " ham=" << m.ham << " $=" << m.dollars << '}';
    }
    os << '\n';
    const auto kids = children(v);
    for (auto it = kids.rbegin(); it != kids.rend(); ++it) stack.emplace_back(*it, indent + 1);
  }
  return os.str();
}

}  // namespace lcfk
