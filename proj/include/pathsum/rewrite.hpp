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
#include <optional>
#include <string>
#include <vector>

#include "pathsum/pathsum.hpp"

namespace pathsum {

enum class Rule { Elim, Z, HH };

/// One rewrite at a pivot variable. For HH, `target` is the variable y in
/// the pivot's cofactor y + Q and `substituent` is Q, with |Var(Q)| <= 1.
/// Indices refer to the path sum the step applies to.
struct RewriteStep {
  Rule rule = Rule::Elim;
  VarId pivot = 0;
  std::optional<VarId> target;
  std::optional<BoolPoly> substituent;

  static RewriteStep elim(VarId x) { return {Rule::Elim, x, std::nullopt, std::nullopt}; }
  static RewriteStep z(VarId x) { return {Rule::Z, x, std::nullopt, std::nullopt}; }
  static RewriteStep hh(VarId x, VarId y, BoolPoly q) { return {Rule::HH, x, y, std::move(q)}; }

  bool operator==(const RewriteStep&) const = default;

  /// `ELIM x=<i>`, `Z x=<i>` or `HH pivot=<i> target=<j> Q=<poly>`.
  std::string to_string() const;
};

struct Strategy {
  enum class Kind { DeterministicFirst, SeededRandom };
  Kind kind = Kind::DeterministicFirst;
  std::uint64_t seed = 0;

  static Strategy first() { return {}; }
  static Strategy random(std::uint64_t seed) { return {Kind::SeededRandom, seed}; }
};

/// Every applicable step, ordered by ascending pivot, then Elim < Z < HH,
/// then ascending HH target.
std::vector<RewriteStep> find_rewrites(const PathSum& a);

/// Applies one step. Variables above a removed pivot shift down by one.
/// Throws StaleStepError if the step's precondition fails on `a`.
PathSum apply_rewrite(const PathSum& a, const RewriteStep& step);

struct Normalized {
  PathSum normal_form;
  std::vector<RewriteStep> trace;
};

/// Rewrites until no rule applies. The trace never exceeds the initial
/// variable count, since every rule removes a variable.
Normalized normalize(const PathSum& a, const Strategy& strategy = Strategy::first());

/// True iff some bijection with per-variable negations maps a onto b
/// structurally. Exponential search; throws InvalidArgument when either sum
/// has more than var_cap variables.
bool simply_equivalent(const PathSum& a, const PathSum& b, std::size_t var_cap = 8);

std::string format_trace(const std::vector<RewriteStep>& trace);

namespace detail {

/// Deterministic-first normalization by repeated find_rewrites/apply_rewrite.
/// Reference for the incremental engine behind normalize().
Normalized normalize_reference(const PathSum& a);

/// The incremental deterministic-first engine.
Normalized normalize_incremental(const PathSum& a);

}  // namespace detail

}  // namespace pathsum
