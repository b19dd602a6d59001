// Copyright 2026 The lcfk Authors
// SPDX-License-Identifier: Apache-2.0

#include "lcfk/colored_trees.hpp"

#include <algorithm>
#include <bit>
#include <string>
#include <unordered_map>

#include "lcfk/symbols.hpp"

namespace lcfk::colored {

namespace {

constexpr std::uint32_t kNone = 0xffffffffu;

// Set of positions in [0, n) as a 64-ary bit hierarchy with predecessor and
// successor queries in a few word operations.
class PositionSet {
 public:
  explicit PositionSet(std::uint32_t n) {
    std::uint32_t size = std::max(n, 1u);
    do {
      size = (size + 63) / 64;
      levels_.emplace_back(size, 0);
    } while (size > 1);
  }

  void insert(std::uint32_t pos) {
    for (auto& level : levels_) {
      const bool was_empty = level[pos >> 6] == 0;
      level[pos >> 6] |= std::uint64_t{1} << (pos & 63);
      if (!was_empty) return;
      pos >>= 6;
    }
  }

  void erase(std::uint32_t pos) {
    for (auto& level : levels_) {
      level[pos >> 6] &= ~(std::uint64_t{1} << (pos & 63));
      if (level[pos >> 6] != 0) return;
      pos >>= 6;
    }
  }

  // Smallest member >= pos, or kNone.
  std::uint32_t successor(std::uint32_t pos) const {
    std::size_t h = 0;
    std::uint64_t p = pos;
    for (;; ++h) {
      if (h == levels_.size()) return kNone;
      const std::uint64_t word = (p >> 6) < levels_[h].size() ? levels_[h][p >> 6] : 0;
      const std::uint64_t masked = (p & 63) == 0 ? word : word & (~std::uint64_t{0} << (p & 63));
      if (masked != 0) {
        p = ((p >> 6) << 6) | static_cast<std::uint64_t>(std::countr_zero(masked));
        break;
      }
      p = (p >> 6) + 1;
    }
    while (h-- > 0) p = (p << 6) | static_cast<std::uint64_t>(std::countr_zero(levels_[h][p]));
    return static_cast<std::uint32_t>(p);
  }

  // Largest member < pos, or kNone.
  std::uint32_t predecessor(std::uint32_t pos) const {
    if (pos == 0) return kNone;
    std::size_t h = 0;
    std::uint64_t p = pos - 1;
    for (;; ++h) {
      if (h == levels_.size()) return kNone;
      const std::uint64_t word = levels_[h][p >> 6];
      const std::uint64_t masked = (p & 63) == 63 ? word : word & ((std::uint64_t{1} << ((p & 63) + 1)) - 1);
      if (masked != 0) {
        p = ((p >> 6) << 6) | static_cast<std::uint64_t>(63 - std::countl_zero(masked));
        break;
      }
      if ((p >> 6) == 0) return kNone;
      p = (p >> 6) - 1;
    }
    while (h-- > 0) p = (p << 6) | static_cast<std::uint64_t>(63 - std::countl_zero(levels_[h][p]));
    return static_cast<std::uint32_t>(p);
  }

 private:
  std::vector<std::vector<std::uint64_t>> levels_;  // levels_[0] holds the positions
};

// Node of each label of one color. Labels below a small multiple of the tree
// size index a table directly; larger ones go through a sorted list.
class LabelMap {
 public:
  LabelMap(const Tree& t, Color color) {
    std::uint32_t max_label = 0;
    for (const Node& x : t.nodes) {
      if (x.color == color) max_label = std::max(max_label, x.label);
    }
    dense_ = max_label <= 4 * t.nodes.size() + 64;
    if (dense_) table_.assign(std::size_t{max_label} + 1, kNone);
    for (std::uint32_t v = 0; v < t.nodes.size(); ++v) {
      const Node& x = t.nodes[v];
      if (x.color != color) continue;
      if (dense_) {
        if (table_[x.label] != kNone && !duplicate_) duplicate_ = x.label;
        table_[x.label] = v;
      } else {
        sorted_.emplace_back(x.label, v);
      }
    }
    if (!dense_) {
      std::sort(sorted_.begin(), sorted_.end());
      for (std::size_t i = 1; i < sorted_.size(); ++i) {
        if (sorted_[i].first == sorted_[i - 1].first) {
          duplicate_ = sorted_[i].first;
          break;
        }
      }
    }
  }

  // Node with the label, or kNone.
  std::uint32_t find(std::uint32_t label) const {
    if (dense_) return label < table_.size() ? table_[label] : kNone;
    const auto it = std::lower_bound(sorted_.begin(), sorted_.end(), std::pair{label, 0u});
    return it != sorted_.end() && it->first == label ? it->second : kNone;
  }

  std::optional<std::uint32_t> duplicate() const { return duplicate_; }

 private:
  bool dense_ = true;
  std::vector<std::uint32_t> table_;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> sorted_;  // (label, node)
  std::optional<std::uint32_t> duplicate_;
};

void validate_tree(const Tree& t, const char* name) {
  auto fail = [&](const std::string& what) {
    throw InputError(std::string("malformed colored-trees instance (") + name + "): " + what);
  };
  if (t.nodes.empty()) fail("empty tree");
  if (t.nodes[0].parent != -1) fail("node 0 must be the root");
  std::vector<char> has_child(t.nodes.size(), 0);
  for (std::size_t v = 1; v < t.nodes.size(); ++v) {
    const Node& x = t.nodes[v];
    if (x.parent < 0 || static_cast<std::size_t>(x.parent) >= v) fail("node " + std::to_string(v) + " has a bad parent");
    if (x.weight < t.nodes[x.parent].weight) fail("node " + std::to_string(v) + " is lighter than its parent");
    has_child[x.parent] = 1;
  }
  for (std::size_t v = 0; v < t.nodes.size(); ++v) {
    if (t.nodes[v].color != Color::None && has_child[v]) fail("colored node " + std::to_string(v) + " is not a leaf");
  }
  for (Color c : {Color::Blue, Color::Red}) {
    const LabelMap map(t, c);
    if (map.duplicate()) fail("label " + std::to_string(*map.duplicate()) + " repeated within one color");
  }
}

std::unordered_map<std::uint32_t, std::uint32_t> leaves_of(const Tree& t, Color c) {
  std::unordered_map<std::uint32_t, std::uint32_t> out;
  for (std::uint32_t v = 0; v < t.nodes.size(); ++v) {
    if (t.nodes[v].color == c) out.emplace(t.nodes[v].label, v);
  }
  return out;
}

// Labels of one color occurring in both trees, ascending.
std::vector<std::uint32_t> shared_labels(const std::unordered_map<std::uint32_t, std::uint32_t>& a,
                                         const std::unordered_map<std::uint32_t, std::uint32_t>& b) {
  std::vector<std::uint32_t> out;
  for (const auto& [label, v] : a) {
    if (b.contains(label)) out.push_back(label);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::uint32_t naive_lca(const Tree& t, const std::vector<std::uint32_t>& level, std::uint32_t a, std::uint32_t b) {
  while (level[a] > level[b]) a = t.nodes[a].parent;
  while (level[b] > level[a]) b = t.nodes[b].parent;
  while (a != b) {
    a = t.nodes[a].parent;
    b = t.nodes[b].parent;
  }
  return a;
}

std::vector<std::uint32_t> levels(const Tree& t) {
  std::vector<std::uint32_t> level(t.nodes.size(), 0);
  for (std::size_t v = 1; v < t.nodes.size(); ++v) level[v] = level[t.nodes[v].parent] + 1;
  return level;
}

}  // namespace

void Instance::validate() const {
  validate_tree(first, "first tree");
  validate_tree(second, "second tree");
}

LcaIndex::LcaIndex(const Tree& tree) {
  const std::size_t n = tree.nodes.size();
  std::vector<std::uint32_t> child_begin(n + 1, 0), child_list(n > 0 ? n - 1 : 0);
  for (std::size_t v = 1; v < n; ++v) ++child_begin[tree.nodes[v].parent + 1];
  for (std::size_t v = 0; v < n; ++v) child_begin[v + 1] += child_begin[v];
  {
    std::vector<std::uint32_t> fill(child_begin.begin(), child_begin.end() - 1);
    for (std::size_t v = 1; v < n; ++v) child_list[fill[tree.nodes[v].parent]++] = static_cast<std::uint32_t>(v);
  }
  preorder_.assign(n, 0);
  by_preorder_.reserve(n);
  end_.assign(n, 0);
  parent_.assign(n, 0);
  std::vector<std::uint32_t> level(n, 0);

  std::vector<std::pair<std::uint32_t, std::uint32_t>> stack;
  auto enter = [&](std::uint32_t v) {
    const auto p = static_cast<std::uint32_t>(by_preorder_.size());
    preorder_[v] = p;
    by_preorder_.push_back(v);
    level[p] = static_cast<std::uint32_t>(stack.size());
    parent_[p] = tree.nodes[v].parent < 0 ? v : static_cast<std::uint32_t>(tree.nodes[v].parent);
    stack.emplace_back(v, child_begin[v]);
  };
  enter(0);
  while (!stack.empty()) {
    auto& [v, next] = stack.back();
    if (next < child_begin[v + 1]) {
      enter(child_list[next++]);
    } else {
      end_[preorder_[v]] = static_cast<std::uint32_t>(by_preorder_.size());
      stack.pop_back();
    }
  }
  level_ = RangeMinimum<std::uint32_t>(std::move(level));
}

std::uint32_t LcaIndex::lca_at_preorder(std::uint32_t pa, std::uint32_t pb) const {
  if (pa > pb) std::swap(pa, pb);
  if (pb < end_[pa]) return by_preorder_[pa];
  return parent_[level_.argmin(pa + 1, pb)];
}

std::optional<Answer> solve(const Instance& instance) {
  instance.validate();
  const Tree& t1 = instance.first;
  const Tree& t2 = instance.second;
  const std::uint32_t n1 = static_cast<std::uint32_t>(t1.nodes.size());
  const LcaIndex lca2(t2);

  // Second-tree preorder position of each first-tree leaf whose label and
  // color also occur in the second tree.
  const LabelMap blue2(t2, Color::Blue), red2(t2, Color::Red);
  std::vector<std::uint32_t> partner(n1, kNone);
  for (std::uint32_t v = 0; v < n1; ++v) {
    const Node& x = t1.nodes[v];
    if (x.color == Color::None) continue;
    const std::uint32_t u = (x.color == Color::Blue ? blue2 : red2).find(x.label);
    if (u != kNone) partner[v] = lca2.preorder(u);
  }

  // Children in id order, subtree sizes counted in matched leaves, and a
  // preorder of the first tree so that every subtree is a contiguous range.
  std::vector<std::uint32_t> child_begin(n1 + 1, 0), child_list(n1 > 0 ? n1 - 1 : 0);
  for (std::uint32_t v = 1; v < n1; ++v) ++child_begin[t1.nodes[v].parent + 1];
  for (std::uint32_t v = 0; v < n1; ++v) child_begin[v + 1] += child_begin[v];
  {
    std::vector<std::uint32_t> fill(child_begin.begin(), child_begin.end() - 1);
    for (std::uint32_t v = 1; v < n1; ++v) child_list[fill[t1.nodes[v].parent]++] = v;
  }
  std::vector<std::uint32_t> weight(n1, 0);
  for (std::uint32_t v = n1; v-- > 0;) {
    weight[v] += partner[v] != kNone;
    if (v > 0) weight[t1.nodes[v].parent] += weight[v];
  }
  std::vector<std::uint32_t> heavy(n1, kNone);
  for (std::uint32_t v = 0; v < n1; ++v) {
    for (std::uint32_t i = child_begin[v]; i < child_begin[v + 1]; ++i) {
      const std::uint32_t c = child_list[i];
      if (heavy[v] == kNone || weight[c] > weight[heavy[v]]) heavy[v] = c;
    }
  }
  std::vector<std::uint32_t> range_begin(n1), range_end(n1), leaves;
  {
    std::vector<std::uint32_t> stack{0};
    std::vector<char> opened(n1, 0);
    while (!stack.empty()) {
      const std::uint32_t v = stack.back();
      if (opened[v]) {
        range_end[v] = static_cast<std::uint32_t>(leaves.size());
        stack.pop_back();
        continue;
      }
      opened[v] = 1;
      range_begin[v] = static_cast<std::uint32_t>(leaves.size());
      if (partner[v] != kNone) leaves.push_back(v);
      for (std::uint32_t i = child_begin[v + 1]; i-- > child_begin[v];) {
        if (weight[child_list[i]] > 0) stack.push_back(child_list[i]);
      }
    }
  }

  // Matched leaves in range order with their second-tree position and the
  // weight of their second-tree leaf, which bounds any value they can reach.
  struct LeafRecord {
    std::int64_t bound;
    std::uint32_t pos;
    bool blue;
  };
  std::vector<LeafRecord> records(leaves.size());
  for (std::size_t i = 0; i < leaves.size(); ++i) {
    const std::uint32_t pos = partner[leaves[i]];
    records[i] = {t2.nodes[lca2.at_preorder(pos)].weight, pos, t1.nodes[leaves[i]].color == Color::Blue};
  }

  PositionSet blue_set(static_cast<std::uint32_t>(t2.nodes.size()));
  PositionSet red_set(static_cast<std::uint32_t>(t2.nodes.size()));
  std::optional<Answer> best;
  auto probe_insert = [&](std::uint32_t v1, std::int64_t w1, std::uint32_t i) {
    const LeafRecord& r = records[i];
    PositionSet& own = r.blue ? blue_set : red_set;
    if (best && w1 + r.bound <= best->value) {
      own.insert(r.pos);
      return;
    }
    const PositionSet& others = r.blue ? red_set : blue_set;
    auto consider = [&](std::uint32_t other) {
      const std::uint32_t v2 = lca2.lca_at_preorder(r.pos, other);
      const std::int64_t value = w1 + t2.nodes[v2].weight;
      if (!best || value > best->value) {
        const std::uint32_t label = t1.nodes[leaves[i]].label;
        const std::uint32_t other_label = t2.nodes[lca2.at_preorder(other)].label;
        best = Answer{v1, v2, value, r.blue ? label : other_label, r.blue ? other_label : label};
      }
    };
    const std::uint32_t succ = others.successor(r.pos);
    if (succ != kNone) consider(succ);
    const std::uint32_t pred = others.predecessor(r.pos);
    if (pred != kNone) consider(pred);
    own.insert(r.pos);
  };
  auto clear_range = [&](std::uint32_t v) {
    for (std::uint32_t i = range_begin[v]; i < range_end[v]; ++i) {
      (records[i].blue ? blue_set : red_set).erase(records[i].pos);
    }
  };

  // Keep-the-heavy-child traversal: light subtrees are solved and cleared
  // first, the heavy child's positions stay in the sets, then every light
  // leaf probes the sets at v and joins them.
  struct Frame {
    std::uint32_t v;
    bool keep;
    std::uint32_t next;  // next child slot; past the end means the heavy child is done
  };
  std::vector<Frame> stack;
  if (weight[0] > 0) stack.push_back({0, true, 0});
  while (!stack.empty()) {
    Frame& f = stack.back();
    const std::uint32_t v = f.v;
    const std::uint32_t end = child_begin[v + 1] - child_begin[v];
    if (f.next < end) {
      const std::uint32_t c = child_list[child_begin[v] + f.next++];
      if (c != heavy[v] && weight[c] > 0) stack.push_back({c, false, 0});
      continue;
    }
    if (f.next == end) {
      ++f.next;
      if (heavy[v] != kNone && weight[heavy[v]] > 0) {
        stack.push_back({heavy[v], true, 0});
        continue;
      }
    }
    const std::int64_t w1 = t1.nodes[v].weight;
    if (partner[v] != kNone) probe_insert(v, w1, range_begin[v]);
    for (std::uint32_t i = child_begin[v]; i < child_begin[v + 1]; ++i) {
      const std::uint32_t c = child_list[i];
      if (c == heavy[v]) continue;
      for (std::uint32_t j = range_begin[c]; j < range_end[c]; ++j) probe_insert(v, w1, j);
    }
    const bool keep = f.keep;
    stack.pop_back();
    if (!keep) clear_range(v);
  }
  return best;
}

std::optional<Answer> brute_solve(const Instance& instance) {
  instance.validate();
  const Tree& t1 = instance.first;
  const Tree& t2 = instance.second;
  const auto blue1 = leaves_of(t1, Color::Blue), red1 = leaves_of(t1, Color::Red);
  const auto blue2 = leaves_of(t2, Color::Blue), red2 = leaves_of(t2, Color::Red);
  const auto level1 = levels(t1), level2 = levels(t2);
  std::optional<Answer> best;
  for (std::uint32_t b : shared_labels(blue1, blue2)) {
    for (std::uint32_t r : shared_labels(red1, red2)) {
      const std::uint32_t v1 = naive_lca(t1, level1, blue1.at(b), red1.at(r));
      const std::uint32_t v2 = naive_lca(t2, level2, blue2.at(b), red2.at(r));
      const std::int64_t value = t1.nodes[v1].weight + t2.nodes[v2].weight;
      if (!best || value > best->value) best = Answer{v1, v2, value, b, r};
    }
  }
  return best;
}

}  // namespace lcfk::colored
