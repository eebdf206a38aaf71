// Copyright 2026 The pathsum Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "pathsum/pathsum.hpp"

namespace pathsum {

/// A random path sum with at most max_vars variables: a random circuit's
/// interpretation, optionally closed with random kets and bras, brought under
/// the cap by seeded random rewrites and then scrambled by a random simple
/// transform. Every sample is a genuine rewrite descendant of a circuit sum.
PathSum random_path_sum(std::size_t max_vars, std::uint64_t seed);

/// Random simple transform on k variables.
std::vector<SimpleImage> random_simple_map(std::size_t k, std::uint64_t seed);

struct ConfluenceReport {
  std::size_t trials = 0;
  std::size_t passed = 0;
  std::size_t failed = 0;
  /// True when normal forms were compared by simple equivalence, false when
  /// the variable cap forced the weaker eval-equality check.
  bool exact = true;
  /// Seeds of failing trials.
  std::vector<std::uint64_t> failing_seeds;
};

/// Per-trial seeds are derived from `seed`. Each trial normalizes one sample
/// deterministically and under `random_strategies` seeded random strategies,
/// and requires every random normal form to match the deterministic one.
/// Above 8 variables the comparison falls back to eval equality.
ConfluenceReport check_confluence(std::size_t trials, std::size_t max_vars, std::uint64_t seed,
                                  std::size_t random_strategies = 1);

inline constexpr std::size_t kExactEquivalenceCap = 8;

}  // namespace pathsum
