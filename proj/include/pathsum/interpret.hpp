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
#include <span>

#include "pathsum/circuit.hpp"
#include "pathsum/pathsum.hpp"

namespace pathsum {

/// Path sum of a single gate acting on its own wires, in gate-qubit order:
///
///   H      = 2^(-1/2) sum_{x,y} (-1)^{xy} |y><x|
///   X      = sum_x |x+1><x|
///   C^(m)Z = sum_{x_1..x_m,y} (-1)^{y x_1..x_m} |x_1..x_m,y><x_1..x_m,y|
///   SWAP   = sum_{x,y} |y,x><x,y|
PathSum gate_sem(const Gate& g);

/// Places a gate sum on wires `qubits` of an n-wire register, with identity
/// on the rest: the tensor with I_{n-a}, with wires relabeled. The gate's
/// variables come first, then one variable per idle wire in wire order.
PathSum embed(const PathSum& gate, std::span<const Qubit> qubits, std::size_t n);

/// Folds the gates with compose, first gate innermost. The empty circuit is
/// identity(n). Uses at most (m+1)k + 2nk variables for k >= 1 gates.
PathSum interpret(const Circuit& c);

}  // namespace pathsum
