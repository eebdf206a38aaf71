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

// Test-only generators and brute-force oracles. Nothing here calls into the
// rewrite engine or the circuit interpreter.

#include <cstdint>
#include <random>
#include <vector>

#include "pathsum/boolpoly.hpp"
#include "pathsum/circuit.hpp"
#include "pathsum/pathsum.hpp"

namespace pathsum::testing {

inline std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) { return rng() % bound; }

inline BoolPoly random_poly(std::mt19937_64& rng, std::uint32_t num_vars, std::size_t max_terms,
                            std::size_t max_degree) {
  std::vector<Monomial> ms;
  const std::size_t terms = draw(rng, max_terms + 1);
  for (std::size_t t = 0; t < terms; ++t) {
    std::vector<VarId> vs;
    const std::size_t deg = num_vars == 0 ? 0 : draw(rng, max_degree + 1);
    for (std::size_t d = 0; d < deg; ++d) vs.push_back(static_cast<VarId>(draw(rng, num_vars)));
    ms.emplace_back(std::span<const VarId>(vs));
  }
  return BoolPoly(std::move(ms));
}

// Value table over all 2^num_vars points, bit v of the point is variable v.
inline std::vector<std::uint8_t> truth_table(const BoolPoly& p, std::uint32_t num_vars) {
  std::vector<std::uint8_t> out(std::size_t{1} << num_vars, 0);
  for (std::size_t point = 0; point < out.size(); ++point) {
    unsigned acc = 0;
    for (const auto& m : p.monomials()) {
      bool all = true;
      for (VarId v : m.vars()) all = all && ((point >> v) & 1u);
      acc ^= all ? 1u : 0u;
    }
    out[point] = static_cast<std::uint8_t>(acc);
  }
  return out;
}

inline PathSum random_sum(std::mt19937_64& rng, std::uint32_t num_vars, std::size_t outputs, std::size_t inputs,
                          std::size_t max_degree = 3) {
  Scalar s = draw(rng, 8) == 0 ? Scalar::zero_value()
                               : Scalar::pow_sqrt2(static_cast<std::int64_t>(draw(rng, 9)) - 6);
  BoolPoly phase = random_poly(rng, num_vars, 6, max_degree);
  std::vector<BoolPoly> outs, ins;
  for (std::size_t i = 0; i < outputs; ++i) outs.push_back(random_poly(rng, num_vars, 3, 2));
  for (std::size_t i = 0; i < inputs; ++i) ins.push_back(random_poly(rng, num_vars, 3, 2));
  return make(s, num_vars, std::move(phase), std::move(outs), std::move(ins));
}

// Full 2^n x 2^n matrix of one gate, qubit 0 most significant.
inline Matrix gate_matrix(const Gate& g, std::size_t n) {
  const std::size_t dim = std::size_t{1} << n;
  auto bit = [n](Qubit q) { return std::size_t{1} << (n - 1 - q); };
  Matrix m(dim, dim);
  for (std::size_t col = 0; col < dim; ++col) {
    switch (g.kind) {
      case GateKind::H: {
        const std::size_t b = bit(g.qubits[0]);
        const std::size_t lo = col & ~b;
        const bool in_one = col & b;
        m.at(lo, col) = Amplitude(1, -1);
        m.at(lo | b, col) = Amplitude(in_one ? -1 : 1, -1);
        break;
      }
      case GateKind::X: m.at(col ^ bit(g.qubits[0]), col) = Amplitude::one(); break;
      case GateKind::Z: {
        std::size_t mask = 0;
        for (Qubit q : g.qubits) mask |= bit(q);
        m.at(col, col) = Amplitude((col & mask) == mask ? -1 : 1);
        break;
      }
      case GateKind::Swap: {
        const std::size_t a = bit(g.qubits[0]), b = bit(g.qubits[1]);
        std::size_t row = col & ~(a | b);
        if (col & a) row |= b;
        if (col & b) row |= a;
        m.at(row, col) = Amplitude::one();
        break;
      }
    }
  }
  return m;
}

inline Matrix dense_unitary(const Circuit& c) {
  Matrix u = Matrix::identity(std::size_t{1} << c.num_qubits);
  for (const auto& g : c.gates) u = gate_matrix(g, c.num_qubits) * u;
  return u;
}

}  // namespace pathsum::testing
