// Copyright 2026 The lcfk Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "lcfk/errata_trie.hpp"
#include "lcfk/oracle.hpp"
#include "support.hpp"

using namespace lcfk;
using lcfk::testing::random_string;
using lcfk::testing::uniform;

namespace {

std::vector<SuffixRef> all_suffixes(const TextIndex& index, TextId t) {
  std::vector<SuffixRef> out;
  for (std::uint32_t i = 0; i < index.length(t); ++i) out.push_back({t, i});
  return out;
}

std::string suffix(const TextIndex& index, SuffixRef r) { return std::string(index.text(r.text).substr(r.start)); }

std::set<std::string> n_strings(const ErrataTrie& trie, SuffixRef f) {
  std::set<std::string> out;
  for (const auto& m : trie.members(f)) out.insert(trie.materialize(m));
  return out;
}

const Membership& find_member(const ErrataTrie& trie, SuffixRef f, const std::string& s) {
  for (const auto& m : trie.members(f)) {
    if (trie.materialize(m) == s) return m;
  }
  FAIL("missing member " << s);
  return trie.members(f)[0];
}

double binom(double n, double r) {
  return std::round(std::exp(std::lgamma(n + 1) - std::lgamma(r + 1) - std::lgamma(n - r + 1)));
}

std::uint32_t ceil_log2(std::size_t m) {
  std::uint32_t l = 0;
  while ((std::size_t{1} << l) < m) ++l;
  return l;
}

// Random family drawn from the suffixes of X, X^R and Y.
std::vector<SuffixRef> random_family(std::mt19937_64& rng, const TextIndex& index, std::size_t size) {
  std::vector<SuffixRef> out;
  for (std::size_t i = 0; i < size; ++i) {
    const TextId t = std::array{TextId::X, TextId::XR, TextId::Y}[rng() % 3];
    if (index.length(t) == 0) continue;
    out.push_back({t, static_cast<std::uint32_t>(rng() % index.length(t))});
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void check_well_formed(const ErrataTrie& trie) {
  const auto nodes = trie.nodes();
  CHECK(nodes[0].depth == 0);
  CHECK(nodes[0].parent == -1);
  for (std::uint32_t v = 0; v < nodes.size(); ++v) {
    if (v != 0) REQUIRE(nodes[v].depth > nodes[nodes[v].parent].depth);
    const auto kids = trie.children(v);
    for (std::size_t c = 1; c < kids.size(); ++c) {
      REQUIRE(nodes[kids[c - 1]].first_symbol < nodes[kids[c]].first_symbol);
    }
    for (std::uint32_t c : kids) REQUIRE(nodes[c].parent == static_cast<std::int32_t>(v));
  }
  std::set<std::string> strings;
  for (std::uint32_t f = 0; f < trie.family().size(); ++f) {
    const std::string base = suffix(trie.index(), trie.family()[f]);
    for (const auto& m : trie.members(f)) {
      const std::string s = trie.materialize(m);
      strings.insert(s);
      REQUIRE(s.size() == base.size());
      REQUIRE(trie.spell(m.node) == s);
      REQUIRE(nodes[m.node].depth == s.size());
      std::uint32_t ham = 0, dollars = 0;
      for (std::size_t i = 0; i < s.size(); ++i) {
        ham += s[i] != base[i];
        dollars += s[i] == '$';
      }
      REQUIRE(ham == m.ham);
      REQUIRE(dollars == m.dollars);
      REQUIRE(m.ham <= static_cast<std::uint32_t>(trie.k()));
      const auto ms = trie.modified_string(m);
      REQUIRE(ms.edits.size() == ms.ham);
      for (std::size_t e = 0; e < ms.edits.size(); ++e) {
        REQUIRE(ms.edits[e].offset < base.size());
        if (e) REQUIRE(ms.edits[e - 1].offset < ms.edits[e].offset);
      }
    }
  }
  CHECK(trie.terminal_count() == strings.size());
}

}  // namespace

TEST_CASE("one-complete family of the suffixes of abacb") {
  const TextIndex index("abacb", "");
  const auto trie = ErrataTrie::generate(all_suffixes(index, TextId::X), 1, index);
  const std::map<std::uint32_t, std::set<std::string>> expected{
      {4, {"a", "b", "$"}}, {3, {"ab", "cb", "$b"}}, {2, {"abb", "acb"}}, {1, {"aacb", "bacb", "$acb"}}, {0, {"abacb"}}};
  for (const auto& [start, strings] : expected) {
    const auto have = n_strings(trie, {TextId::X, start});
    for (const auto& s : strings) CHECK_MESSAGE(have.contains(s), "N(" << start << ") lacks " << s);
  }
  for (std::uint32_t a = 0; a < 5; ++a) {
    for (std::uint32_t b = 0; b < 5; ++b) {
      for (int d = 0; d <= 1; ++d) {
        CHECK(trie.lcp_d({TextId::X, a}, {TextId::X, b}, d) ==
              oracle::lcp_d_brute(suffix(index, {TextId::X, a}), suffix(index, {TextId::X, b}), d));
      }
    }
  }
  CHECK(trie.lcp_d({TextId::X, 2}, {TextId::X, 3}, 1) == 1);
  const auto& abb = find_member(trie, {TextId::X, 2}, "abb");
  const auto& ab = find_member(trie, {TextId::X, 3}, "ab");
  CHECK(trie.lcp_terminals(abb.terminal(), ab.terminal()) == 2);
  CHECK(trie.lcp_terminals(abb.terminal(), abb.terminal()) == 3);
  check_well_formed(trie);
}

TEST_CASE("budgeted subsets") {
  const TextIndex index("abacb", "");
  const auto trie = ErrataTrie::generate(all_suffixes(index, TextId::X), 1, index);
  const SuffixRef cb{TextId::X, 3};
  std::set<std::string> half;
  for (const auto& t : trie.n_subset(cb, 1, 1)) half.insert(trie.spell(t.node));
  CHECK(half.contains("$b"));
  CHECK_FALSE(half.contains("ab"));
  CHECK(half.contains("cb"));
  const auto zero = trie.n_subset(cb, 0, 0);
  REQUIRE(zero.size() == 1);
  CHECK(trie.spell(zero[0].node) == "cb");
  CHECK_THROWS_AS((void)trie.n_subset({TextId::Y, 0}, 0, 0), ContractViolation);
}

TEST_CASE("budgeted subsets are monotone") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    const TextIndex index(random_string(rng, uniform(rng, 5, 40), 2), random_string(rng, uniform(rng, 5, 40), 2));
    const auto family = random_family(rng, index, 24);
    const int k = 3;
    const auto trie = ErrataTrie::generate(family, k, index);
    for (const auto& f : trie.family()) {
      for (int d = 0; d <= k; ++d) {
        for (int a = 0; a <= 2 * d; ++a) {
          auto base = trie.n_subset(f, d, a);
          std::set<TerminalHandle> s(base.begin(), base.end());
          for (const auto& t : trie.n_subset(f, d, a)) {
            const auto found = trie.members(f);
            CHECK(std::any_of(found.begin(), found.end(), [&](const Membership& m) {
              return m.node == t.node && m.ham <= static_cast<std::uint32_t>(d) &&
                     m.adj2() <= static_cast<std::uint32_t>(a);
            }));
          }
          if (d < k) {
            auto bigger = trie.n_subset(f, d + 1, a);
            std::set<TerminalHandle> b(bigger.begin(), bigger.end());
            CHECK(std::includes(b.begin(), b.end(), s.begin(), s.end()));
          }
          if (a < 2 * d) {
            auto bigger = trie.n_subset(f, d, a + 1);
            std::set<TerminalHandle> b(bigger.begin(), bigger.end());
            CHECK(std::includes(b.begin(), b.end(), s.begin(), s.end()));
          }
        }
      }
    }
  }
}

TEST_CASE("zero budget gives the compacted trie of the family") {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 30; ++trial) {
    const TextIndex index(random_string(rng, uniform(rng, 1, 50), 3), random_string(rng, uniform(rng, 1, 50), 3));
    const auto family = random_family(rng, index, 30);
    const auto trie = ErrataTrie::generate(family, 0, index);
    for (const auto& f : trie.family()) {
      REQUIRE(trie.members(f).size() == 1);
      CHECK(trie.materialize(trie.members(f)[0]) == suffix(index, f));
    }
    // Every internal node other than the root branches.
    for (std::uint32_t v = 1; v < trie.nodes().size(); ++v) {
      const auto& node = trie.node(v);
      if (node.member_begin == node.member_end) CHECK(trie.children(v).size() >= 2);
    }
    check_well_formed(trie);
  }
}

TEST_CASE("modified LCP equals brute-force LCP with mismatches") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    const TextIndex index(random_string(rng, uniform(rng, 1, 40), 2), random_string(rng, uniform(rng, 1, 40), 2));
    const auto family = random_family(rng, index, 32);
    const int k = trial % 3 == 0 ? 1 : 2;
    const auto trie = ErrataTrie::generate(family, k, index);
    for (const auto& a : trie.family()) {
      for (const auto& b : trie.family()) {
        for (int d = 0; d <= k; ++d) {
          REQUIRE(trie.lcp_d(a, b, d) == oracle::lcp_d_brute(suffix(index, a), suffix(index, b), d));
        }
      }
    }
    check_well_formed(trie);
  }
}

TEST_CASE("terminal LCP matches a naive scan") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 20; ++trial) {
    const TextIndex index(random_string(rng, uniform(rng, 10, 60), 2), random_string(rng, uniform(rng, 10, 60), 3));
    const auto trie = ErrataTrie::generate(random_family(rng, index, 40), 2, index);
    std::vector<Membership> all;
    for (std::uint32_t f = 0; f < trie.family().size(); ++f) {
      for (const auto& m : trie.members(f)) all.push_back(m);
    }
    for (int q = 0; q < 500; ++q) {
      const auto& a = all[rng() % all.size()];
      const auto& b = all[rng() % all.size()];
      const auto sa = trie.materialize(a), sb = trie.materialize(b);
      std::uint32_t l = 0;
      while (l < sa.size() && l < sb.size() && sa[l] == sb[l]) ++l;
      CHECK(trie.lcp_terminals(a.terminal(), b.terminal()) == l);
    }
  }
}

TEST_CASE("lca and ancestry agree with parent walks") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 30; ++trial) {
    const TextIndex index(random_string(rng, uniform(rng, 5, 40), 3), random_string(rng, uniform(rng, 5, 40), 3));
    const auto trie = ErrataTrie::generate(random_family(rng, index, 20), 1, index);
    const auto nodes = trie.nodes();
    auto ancestors = [&](std::uint32_t v) {
      std::set<std::uint32_t> out;
      for (std::int32_t u = static_cast<std::int32_t>(v); u != -1; u = nodes[u].parent) out.insert(u);
      return out;
    };
    for (std::uint32_t a = 0; a < nodes.size(); ++a) {
      const auto up = ancestors(a);
      for (std::uint32_t b = 0; b < nodes.size(); ++b) {
        std::int32_t u = static_cast<std::int32_t>(b);
        while (!up.contains(u)) u = nodes[u].parent;
        REQUIRE(trie.lca(a, b) == static_cast<std::uint32_t>(u));
        REQUIRE(trie.is_ancestor(a, b) == (u == static_cast<std::int32_t>(a)));
      }
    }
  }
}

TEST_CASE("size bounds") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    const int sigma = trial % 2 ? 2 : 4;
    const TextIndex index(random_string(rng, uniform(rng, 50, 300), sigma),
                          random_string(rng, uniform(rng, 50, 300), sigma));
    const auto family = random_family(rng, index, uniform(rng, 1, 256));
    const int k = static_cast<int>(uniform(rng, 0, 3));
    const auto trie = ErrataTrie::generate(family, k, index);
    const std::size_t m = trie.family().size();
    const std::uint32_t lg = ceil_log2(m);
    for (const auto& f : trie.family()) {
      for (int d = 0; d <= k; ++d) {
        std::size_t count = 0;
        for (const auto& mem : trie.members(f)) count += mem.ham <= static_cast<std::uint32_t>(d);
        REQUIRE(static_cast<double>(count) <= std::pow(2.0, d) * binom(lg + d, d));
      }
    }
    const double proxy = 3.0 * m * std::pow(2.0, k) * binom(lg + k + 1, k + 1);
    CHECK(static_cast<double>(trie.nodes().size()) <= proxy);
  }
}

TEST_CASE("dump is deterministic") {
  const TextIndex index("abaababbab", "babba");
  std::vector<SuffixRef> family = all_suffixes(index, TextId::X);
  for (const auto& r : all_suffixes(index, TextId::Y)) family.push_back(r);
  const auto a = ErrataTrie::generate(family, 2, index);
  std::reverse(family.begin(), family.end());
  const auto b = ErrataTrie::generate(family, 2, index);
  CHECK(a.dump() == b.dump());
  CHECK_FALSE(a.dump().empty());
  CHECK(a.serial() != b.serial());
}

TEST_CASE("invalid arguments") {
  const TextIndex index("ab", "ba");
  const std::vector<SuffixRef> family{{TextId::X, 0}};
  CHECK_THROWS_AS(ErrataTrie::generate(family, -1, index), InputError);
  CHECK_THROWS_AS(ErrataTrie::generate({}, 1, index), InputError);
}
