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
#include <string_view>
#include <vector>

#include "pathsum/bits.hpp"

namespace pathsum {

using Qubit = std::uint32_t;

/// Z is the multiply-controlled Z: with qubits q_0..q_m it is C^(m)Z. The
/// gate is symmetric in its qubits, so no qubit is singled out as target.
enum class GateKind { H, X, Z, Swap };

struct Gate {
  GateKind kind = GateKind::H;
  std::vector<Qubit> qubits;

  static Gate h(Qubit q) { return {GateKind::H, {q}}; }
  static Gate x(Qubit q) { return {GateKind::X, {q}}; }
  static Gate z(std::vector<Qubit> qs) { return {GateKind::Z, std::move(qs)}; }
  static Gate swap(Qubit a, Qubit b) { return {GateKind::Swap, {a, b}}; }

  /// Number of controls for Z gates, 0 otherwise.
  std::size_t controls() const { return kind == GateKind::Z ? qubits.size() - 1 : 0; }

  bool operator==(const Gate&) const = default;
};

/// Default cap on controls of C^(m)Z gates: up to CCZ.
inline constexpr std::size_t kDefaultMaxControls = 2;

struct Circuit {
  std::size_t num_qubits = 0;
  std::vector<Gate> gates;

  /// Throws InvalidArgument on an out-of-range or repeated qubit, a wrong
  /// arity, or a Z gate with more than max_controls controls.
  void validate(std::size_t max_controls = kDefaultMaxControls) const;

  /// Largest control count over the Z gates, 0 if there are none.
  std::size_t max_controls() const;

  bool operator==(const Circuit&) const = default;
};

/// Parses the line format:
///
///   qubits N
///   h q | x q | swap a b | z q1 [q2 ...]
///
/// `cz a b` and `ccz a b c` are accepted as spellings of `z` with two and
/// three qubits; serialize() always writes `z`.
/// `#` starts a comment. Throws ParseError with the 1-based line and column.
Circuit parse_circuit(std::string_view text, std::size_t max_controls = kDefaultMaxControls);
std::string serialize(const Circuit& c);

struct Volume {
  std::size_t gates = 0;
  std::size_t qubits = 0;
  /// gates * qubits.
  std::size_t volume = 0;
};

Volume volume(const Circuit& c);

/// Reproducible for a fixed seed. Draws gate kinds uniformly from
/// {H, X, SWAP (if n >= 2), C^(j)Z for j = 0..max_controls}, then distinct
/// qubits uniformly. Requires max_controls + 1 <= n.
Circuit random_circuit(std::size_t n, std::size_t depth, std::size_t max_controls, std::uint64_t seed);

/// Parameters of a hidden shift instance over n = 2h qubits.
struct HiddenShiftSpec {
  std::size_t n = 0;
  /// Monomials of g over 0..h-1. Each has 1..max_controls+1 distinct indices.
  std::vector<std::vector<Qubit>> g;
  Bits shift;
  /// Permutation of 0..h-1; empty means identity.
  std::vector<Qubit> pi;

  void validate(std::size_t max_controls = kDefaultMaxControls) const;

  bool operator==(const HiddenShiftSpec&) const = default;
};

/// Builds the circuit, left to right:
///   H^n, X^s, CZ(i, h + pi(i)), O_g on the second half, X^s, H^n,
///   CZ(i, h + pi(i)), O_g on the first half through pi^-1, H^n.
/// On |0^n> it outputs |s> with amplitude exactly 1.
Circuit hidden_shift_circuit(const HiddenShiftSpec& spec, std::size_t max_controls = kDefaultMaxControls);

/// "a,b,c;d;e,f" -> {{a,b,c},{d},{e,f}}. Empty text is the empty set.
std::vector<std::vector<Qubit>> parse_monomial_list(std::string_view text);
/// "2,0,1" -> {2,0,1}.
std::vector<Qubit> parse_permutation(std::string_view text);

/// Random hidden shift instance: `cubic` degree-3 monomials (each yields one
/// CCZ per oracle layer), a few random lower-degree monomials, a random shift,
/// and a random pi when `permute` is set.
HiddenShiftSpec random_hidden_shift_spec(std::size_t n, std::size_t cubic, bool permute, std::uint64_t seed);

}  // namespace pathsum
