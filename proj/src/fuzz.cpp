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

#include "pathsum/fuzz.hpp"

#include <random>

#include "pathsum/circuit.hpp"
#include "pathsum/errors.hpp"
#include "pathsum/interpret.hpp"
#include "pathsum/rewrite.hpp"
#include "random.hpp"

namespace pathsum {

namespace {

std::uint64_t mix(std::uint64_t seed, std::uint64_t i) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (i + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

Bits random_bits(std::mt19937_64& rng, std::size_t n) {
  Bits b(n);
  for (auto& v : b) v = static_cast<std::uint8_t>(rng() & 1u);
  return b;
}

}  // namespace

std::vector<SimpleImage> random_simple_map(std::size_t k, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto perm = detail::distinct_below(rng, static_cast<std::uint32_t>(k), k);
  std::vector<SimpleImage> phi(k);
  for (std::size_t v = 0; v < k; ++v) phi[v] = {perm[v], (rng() & 1u) != 0};
  return phi;
}

PathSum random_path_sum(std::size_t max_vars, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  while (true) {
    const std::size_t n = 1 + detail::uniform_below(rng, 3);
    const std::size_t depth = 1 + detail::uniform_below(rng, 5);
    const std::size_t controls = std::min<std::size_t>(2, n - 1);
    PathSum a = interpret(random_circuit(n, depth, controls, rng()));
    if (rng() & 1u) a = compose(a, ket(random_bits(rng, n)));
    if (rng() & 1u) a = compose(bra(random_bits(rng, n)), a);
    while (a.num_vars() > max_vars) {
      auto steps = find_rewrites(a);
      if (steps.empty()) break;
      a = apply_rewrite(a, steps[detail::uniform_below(rng, steps.size())]);
    }
    if (a.num_vars() > max_vars) continue;
    return apply_simple_transform(a, random_simple_map(a.num_vars(), rng()));
  }
}

ConfluenceReport check_confluence(std::size_t trials, std::size_t max_vars, std::uint64_t seed,
                                  std::size_t random_strategies) {
  ConfluenceReport report;
  report.exact = max_vars <= kExactEquivalenceCap;
  for (std::size_t t = 0; t < trials; ++t) {
    const std::uint64_t trial_seed = mix(seed, t);
    const PathSum a = random_path_sum(max_vars, trial_seed);
    const PathSum reference = normalize(a).normal_form;
    bool ok = true;
    for (std::size_t r = 0; r < random_strategies && ok; ++r) {
      const PathSum other = normalize(a, Strategy::random(mix(trial_seed, r))).normal_form;
      ok = eval(reference) == eval(other);
      if (ok && report.exact) ok = simply_equivalent(reference, other, kExactEquivalenceCap);
    }
    ++report.trials;
    if (ok) {
      ++report.passed;
    } else {
      ++report.failed;
      report.failing_seeds.push_back(trial_seed);
    }
  }
  return report;
}

}  // namespace pathsum
