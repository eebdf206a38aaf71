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

#include "pathsum/interpret.hpp"

#include <algorithm>

#include "pathsum/errors.hpp"

namespace pathsum {

PathSum gate_sem(const Gate& g) {
  switch (g.kind) {
    case GateKind::H:
      return make(Scalar::pow_sqrt2(-1), 2, BoolPoly{Monomial{0, 1}}, {BoolPoly::variable(1)},
                  {BoolPoly::variable(0)});
    case GateKind::X:
      return make(Scalar::one(), 1, BoolPoly::zero(), {BoolPoly::variable(0) + BoolPoly::one()},
                  {BoolPoly::variable(0)});
    case GateKind::Swap:
      return make(Scalar::one(), 2, BoolPoly::zero(), {BoolPoly::variable(1), BoolPoly::variable(0)},
                  {BoolPoly::variable(0), BoolPoly::variable(1)});
    case GateKind::Z: {
      const auto arity = static_cast<std::uint32_t>(g.qubits.size());
      if (arity == 0) throw InvalidArgument("z gate without qubits");
      std::vector<VarId> all(arity);
      std::vector<BoolPoly> wires;
      for (std::uint32_t i = 0; i < arity; ++i) {
        all[i] = i;
        wires.push_back(BoolPoly::variable(i));
      }
      return make(Scalar::one(), arity, BoolPoly{Monomial(std::span<const VarId>(all))}, wires, wires);
    }
  }
  throw InvalidArgument("unknown gate kind");
}

PathSum embed(const PathSum& gate, std::span<const Qubit> qubits, std::size_t n) {
  if (gate.num_inputs() != qubits.size() || gate.num_outputs() != qubits.size())
    throw InvalidArgument("embed: gate signature does not match its qubit list");
  std::vector<BoolPoly> outs(n), ins(n);
  std::vector<char> used(n, 0);
  for (std::size_t j = 0; j < qubits.size(); ++j) {
    if (qubits[j] >= n || used[qubits[j]]) throw InvalidArgument("embed: qubit out of range or repeated");
    used[qubits[j]] = 1;
    outs[qubits[j]] = gate.outputs()[j];
    ins[qubits[j]] = gate.inputs()[j];
  }
  VarId next = gate.num_vars();
  for (std::size_t w = 0; w < n; ++w) {
    if (used[w]) continue;
    outs[w] = ins[w] = BoolPoly::variable(next++);
  }
  return make(gate.scalar(), next, gate.phase(), std::move(outs), std::move(ins));
}

PathSum interpret(const Circuit& c) {
  c.validate(SIZE_MAX);
  if (c.gates.empty()) return identity(c.num_qubits);
  // Same sum as folding acc = compose(embed(g_i), acc), built in one pass.
  // The fold puts the last layer's variables first, then the earlier layers
  // in reverse order, then the mediators of each composition in order.
  const std::size_t n = c.num_qubits;
  const std::size_t k = c.gates.size();
  std::vector<PathSum> sems;
  sems.reserve(k);
  for (const auto& g : c.gates) sems.push_back(gate_sem(g));

  // slot[i * n + w]: gate wire index of w in layer i, or the idle variable
  // (relative to the layer) encoded as ~var.
  std::vector<std::int64_t> slot(k * n);
  std::vector<VarId> offset(k);
  VarId next = 0;
  for (std::size_t i = k; i-- > 0;) {
    offset[i] = next;
    std::int64_t* row = &slot[i * n];
    std::fill(row, row + n, -1);
    const auto& qs = c.gates[i].qubits;
    for (std::size_t j = 0; j < qs.size(); ++j) row[qs[j]] = static_cast<std::int64_t>(j);
    VarId idle = sems[i].num_vars();
    for (std::size_t w = 0; w < n; ++w)
      if (row[w] < 0) row[w] = ~static_cast<std::int64_t>(idle++);
    next += idle;
  }
  const VarId mediators = next;
  const auto total = static_cast<std::uint32_t>(mediators + n * (k - 1));

  // Appends y * (wire w of layer i), shifted to its final variables.
  auto append_wire = [&](std::size_t i, std::size_t w, bool output, const Monomial& y, std::vector<Monomial>& dst) {
    const VarId d = offset[i];
    const std::int64_t s = slot[i * n + w];
    if (s < 0) {
      dst.push_back(y * Monomial{static_cast<VarId>(d + ~s)});
      return;
    }
    const BoolPoly& p = output ? sems[i].outputs()[static_cast<std::size_t>(s)]
                               : sems[i].inputs()[static_cast<std::size_t>(s)];
    for (const auto& m : p.monomials()) dst.push_back(y * m.relabel_monotone([d](VarId v) { return v + d; }));
  };

  std::vector<Monomial> phase;
  Scalar scalar = Scalar::pow_sqrt2(-2 * static_cast<std::int64_t>(n * (k - 1)));
  for (std::size_t i = 0; i < k; ++i) {
    scalar = scalar * sems[i].scalar();
    for (const auto& m : sems[i].phase().monomials())
      phase.push_back(m.relabel_monotone([d = offset[i]](VarId v) { return v + d; }));
  }
  for (std::size_t i = 1; i < k; ++i)
    for (std::size_t w = 0; w < n; ++w) {
      const Monomial y{static_cast<VarId>(mediators + (i - 1) * n + w)};
      append_wire(i - 1, w, true, y, phase);
      append_wire(i, w, false, y, phase);
    }

  std::vector<BoolPoly> outs, ins;
  outs.reserve(n);
  ins.reserve(n);
  for (std::size_t w = 0; w < n; ++w) {
    std::vector<Monomial> o, in;
    append_wire(k - 1, w, true, Monomial{}, o);
    append_wire(0, w, false, Monomial{}, in);
    outs.emplace_back(std::move(o));
    ins.emplace_back(std::move(in));
  }
  return PathSum(scalar, total, BoolPoly(std::move(phase)), std::move(outs), std::move(ins));
}

}  // namespace pathsum
