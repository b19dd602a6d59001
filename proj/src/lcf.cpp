// Copyright 2026 The lcfk Authors
// SPDX-License-Identifier: Apache-2.0

#include "lcfk/lcf.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <string>
#include <thread>
#include <tuple>

namespace lcfk {

std::vector<CutPair> pairs(const TextIndex& index, TextId source, const DifferenceCover& cover) {
  if (source != TextId::X && source != TextId::Y) throw ContractViolation("cut pairs are taken from X or Y");
  const TextId reversed = source == TextId::X ? TextId::XR : TextId::YR;
  const std::uint32_t n = index.length(source);
  std::vector<CutPair> out;
  for (std::uint32_t cut : cover.enumerate(n)) {
    out.push_back({source, cut, SuffixRef{reversed, n - cut + 1}, SuffixRef{source, cut - 1}});
  }
  return out;
}

namespace {

// Closure-form pair enumeration restricted to doubled adjusted cost in [lo2, hi2].
PairFamily collect_pairs(const ErrataTrie& trie, std::span<const CutPair> base, int k, int lo2, int hi2) {
  PairFamily out;
  out.trie_serial = trie.serial();
  for (const CutPair& cp : base) {
    const auto left = trie.members(cp.left);
    const auto right = trie.members(cp.right);
    for (const Membership& a : left) {
      if (static_cast<int>(a.ham) > k || static_cast<int>(a.adj2()) > hi2) continue;
      for (const Membership& b : right) {
        const std::uint32_t ham = a.ham + b.ham;
        const std::uint32_t adj2 = a.adj2() + b.adj2();
        if (static_cast<int>(ham) > k || static_cast<int>(adj2) > hi2 || static_cast<int>(adj2) < lo2) continue;
        out.elements.push_back({a.terminal(), b.terminal(), {cp.source, cp.cut, ham, adj2}});
      }
    }
  }
  return out;
}

}  // namespace

PairFamily pairs_budgeted(const ErrataTrie& trie, std::span<const CutPair> base, int k, int k2) {
  return collect_pairs(trie, base, k, 0, k2);
}

namespace {

struct Candidate {
  std::uint64_t value = 0;
  std::uint32_t x_begin = 0;
  std::uint32_t y_begin = 0;
  std::uint32_t left = 0;
  std::uint32_t right = 0;
  std::uint32_t x_cut = 0;
  std::uint32_t y_cut = 0;
};

template <typename Fn>
void run_parallel(std::size_t count, unsigned threads, Fn&& fn) {
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(count)));
  if (threads == 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) fn(i);
    });
  }
}

}  // namespace

SolveReport solve_report(std::string_view x, std::string_view y, int k, std::uint32_t min_len,
                         const SolveOptions& options) {
  check_alphabet(x, "X");
  check_alphabet(y, "Y");
  if (k < 0) throw InputError("mismatch budget k must be non-negative");
  if (min_len < 1) throw InputError("minimum length must be at least 1");
  if (options.cover && options.cover->period() != min_len) {
    throw InputError("supplied cover period must equal the minimum length");
  }

  SolveReport report;
  if (min_len > std::min(x.size(), y.size())) return report;

  const DifferenceCover cover = options.cover ? *options.cover : DifferenceCover::build(min_len);
  const TextIndex index(x, y);
  const auto cuts_x = pairs(index, TextId::X, cover);
  const auto cuts_y = pairs(index, TextId::Y, cover);
  report.cut_count = cuts_x.size() + cuts_y.size();

  std::vector<SuffixRef> family;
  family.reserve(2 * report.cut_count);
  for (const auto* cuts : {&cuts_x, &cuts_y}) {
    for (const CutPair& cp : *cuts) {
      family.push_back(cp.left);
      family.push_back(cp.right);
    }
  }
  const ErrataTrie trie = ErrataTrie::generate(family, k, index);
  report.family_size = trie.family().size();
  report.trie_nodes = trie.nodes().size();

  const std::size_t splits = static_cast<std::size_t>(2 * k + 1);
  std::vector<Candidate> found(splits);
  run_parallel(splits, options.threads, [&](std::size_t i) {
    const PairFamily px = collect_pairs(trie, cuts_x, k, static_cast<int>(i), static_cast<int>(i));
    const PairFamily py = collect_pairs(trie, cuts_y, k, 0, static_cast<int>(2 * k - i));
    const auto best = max_pair_lcp(trie, px, py);
    if (!best) return;
    const std::uint32_t a = px.elements[best->p_index].origin.cut;
    const std::uint32_t b = py.elements[best->q_index].origin.cut;
    found[i] = {best->value, a - 1 - best->lcp_first, b - 1 - best->lcp_first, best->lcp_first, best->lcp_second, a, b};
  });

  // Reduce in split order; equal values go to the smallest (x_begin, y_begin).
  const Candidate* winner = nullptr;
  for (const Candidate& c : found) {
    report.instance_values.push_back(c.value);
    if (!winner || c.value > winner->value ||
        (c.value == winner->value && std::tie(c.x_begin, c.y_begin) < std::tie(winner->x_begin, winner->y_begin))) {
      winner = &c;
    }
  }
  report.candidate = winner ? winner->value : 0;
  if (!winner || report.candidate < min_len) return report;

  MatchResult& r = report.result;
  r.status = Status::Found;
  r.length = static_cast<std::uint32_t>(winner->value);
  r.x_begin = winner->x_begin;
  r.x_end = winner->x_cut - 1 + winner->right;
  r.y_begin = winner->y_begin;
  r.y_end = winner->y_cut - 1 + winner->right;
  const bool in_bounds = r.x_end <= x.size() && r.y_end <= y.size() && r.x_end - r.x_begin == r.length &&
                         r.y_end - r.y_begin == r.length;
  for (std::uint32_t i = 0; in_bounds && i < r.length; ++i) {
    if (x[r.x_begin + i] != y[r.y_begin + i]) r.mismatches.push_back(i);
  }
  if (!in_bounds || r.mismatches.size() > static_cast<std::size_t>(k)) {
    throw std::logic_error("solver produced an invalid witness: " + std::to_string(r.mismatches.size()) +
                           " mismatches at x=" + std::to_string(r.x_begin) + " y=" + std::to_string(r.y_begin) +
                           " length " + std::to_string(r.length));
  }
  return report;
}

MatchResult solve(std::string_view x, std::string_view y, int k, std::uint32_t min_len, const SolveOptions& options) {
  return solve_report(x, y, k, min_len, options).result;
}

MatchResult solve_exact_zero(std::string_view x, std::string_view y, std::uint32_t min_len) {
  return solve(x, y, 0, min_len);
}

}  // namespace lcfk
