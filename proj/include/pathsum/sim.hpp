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
#include <string>
#include <vector>

#include "pathsum/amplitude.hpp"
#include "pathsum/bits.hpp"
#include "pathsum/circuit.hpp"
#include "pathsum/pathsum.hpp"

namespace pathsum {

struct SimOptions {
  /// Largest normal form that is expanded densely.
  std::size_t max_eval_vars = kDefaultMaxEvalVars;
};

/// Counters from one simulation run.
struct SimStats {
  std::size_t initial_vars = 0;
  std::size_t rewrite_steps = 0;
  std::size_t residual_vars = 0;
};

/// Exact probability. The value is checked to lie in [0, 1].
struct Probability {
  Amplitude exact;

  double decimal() const { return exact.to_double(); }
  bool is_zero() const { return exact.is_zero(); }
  bool is_one() const { return exact.is_one(); }
  bool operator==(const Probability&) const = default;
};

/// <y| U_C |x>: builds bra(y) o [[C]] o ket(x), normalizes it
/// deterministically, then evaluates the residual sum. Throws EvalGuardError
/// when the normal form keeps more than max_eval_vars variables.
Amplitude strong_sim(const Circuit& c, const Bits& x, const Bits& y, const SimOptions& opts = {},
                     SimStats* stats = nullptr);

/// Pr[qubit i reads 1] on input x: normalizes
/// g^dagger o (I_i (x) |1><1| (x) I_{n-i-1}) o g with g = [[C]] o ket(x).
Probability measure_sim(const Circuit& c, const Bits& x, std::size_t qubit, const SimOptions& opts = {},
                        SimStats* stats = nullptr);

/// The sandwich sum measure_sim normalizes, for a prepared g = [[C]] o ket(x).
PathSum measurement_sum(const PathSum& g, std::size_t qubit);

struct ShiftResult {
  Bits shift;
  std::vector<Probability> per_qubit_probability;
  std::size_t rewrite_steps_total = 0;
  /// Variable count of each qubit's sandwich sum before rewriting.
  std::vector<std::size_t> sandwich_vars;
};

/// Measures every qubit of C on |0^n>. Throws NonDeterministicError as soon
/// as a probability is neither exactly 0 nor exactly 1.
ShiftResult recover_shift(const Circuit& c, const SimOptions& opts = {});

/// Straight-line dense simulator used to check the symbolic engine. Returns
/// the exact state U_C|x>, indexed with qubit 0 as the most significant bit.
inline constexpr std::size_t kOracleMaxQubits = 14;
std::vector<Amplitude> statevector_oracle(const Circuit& c, const Bits& x, std::size_t max_qubits = kOracleMaxQubits);

}  // namespace pathsum
