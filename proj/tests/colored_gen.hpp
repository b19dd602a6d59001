// Copyright 2026 The lcfk Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <random>

#include "lcfk/colored_trees.hpp"
#include "support.hpp"

namespace lcfk::testing {

// Random skeleton of `internal` nodes with leaves for a subset of the labels
// 1..labels hung below random skeleton nodes. Weights never decrease downwards.
inline colored::Tree random_colored_tree(std::mt19937_64& rng, std::size_t internal, std::uint32_t labels,
                                         int max_step) {
  colored::Tree t(static_cast<std::int64_t>(uniform(rng, 0, 2)));
  for (std::size_t i = 1; i < internal; ++i) {
    const auto parent = static_cast<std::uint32_t>(rng() % t.size());
    t.add_node(parent, t.nodes[parent].weight + static_cast<std::int64_t>(uniform(rng, 0, max_step)));
  }
  const std::size_t skeleton = t.size();
  for (std::uint32_t label = 1; label <= labels; ++label) {
    for (auto color : {colored::Color::Blue, colored::Color::Red}) {
      if (rng() % 4 == 0) continue;
      const auto parent = static_cast<std::uint32_t>(rng() % skeleton);
      t.add_leaf(parent, color, label, t.nodes[parent].weight + static_cast<std::int64_t>(uniform(rng, 0, max_step)));
    }
  }
  return t;
}

inline colored::Instance random_colored_instance(std::mt19937_64& rng, std::size_t max_nodes) {
  const auto labels = static_cast<std::uint32_t>(uniform(rng, 1, max_nodes / 6));
  const std::size_t internal = uniform(rng, 1, max_nodes / 2 - 2 * labels);
  const int step = static_cast<int>(uniform(rng, 0, 3));
  return {random_colored_tree(rng, internal, labels, step), random_colored_tree(rng, internal, labels, step)};
}

}  // namespace lcfk::testing
