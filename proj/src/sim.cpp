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

#include "pathsum/sim.hpp"

#include "pathsum/errors.hpp"
#include "pathsum/interpret.hpp"
#include "pathsum/rewrite.hpp"

namespace pathsum {

namespace {

void check_width(const Circuit& c, const Bits& bits, const char* what) {
  if (bits.size() != c.num_qubits)
    throw InvalidArgument(std::string(what) + " has " + std::to_string(bits.size()) + " bits but the circuit has " +
                          std::to_string(c.num_qubits) + " qubits");
}

Amplitude normalize_and_eval(const PathSum& f, const SimOptions& opts, SimStats* stats) {
  Normalized nf = normalize(f);
  if (nf.trace.size() > f.num_vars())
    throw InternalError("rewrite trace longer than the initial variable count");
  if (stats) {
    stats->initial_vars = f.num_vars();
    stats->rewrite_steps = nf.trace.size();
    stats->residual_vars = nf.normal_form.num_vars();
  }
  Matrix m = eval(nf.normal_form, opts.max_eval_vars);
  return m.at(0, 0);
}

Probability checked_probability(Amplitude value) {
  if (value.sign() < 0 || !value.le_one())
    throw InternalError("measurement produced " + value.to_string() + ", which is not a probability");
  return {std::move(value)};
}

Probability measure_prepared(const PathSum& g, std::size_t qubit, const SimOptions& opts, SimStats* stats) {
  return checked_probability(normalize_and_eval(measurement_sum(g, qubit), opts, stats));
}

}  // namespace

Amplitude strong_sim(const Circuit& c, const Bits& x, const Bits& y, const SimOptions& opts, SimStats* stats) {
  check_width(c, x, "input");
  check_width(c, y, "output");
  PathSum f = compose(bra(y), compose(interpret(c), ket(x)));
  return normalize_and_eval(f, opts, stats);
}

PathSum measurement_sum(const PathSum& g, std::size_t qubit) {
  const std::size_t n = g.num_outputs();
  if (qubit >= n) throw InvalidArgument("qubit " + std::to_string(qubit) + " out of range for " + std::to_string(n));
  const PathSum projector = compose(ket({1}), bra({1}));
  const PathSum p = tensor(tensor(identity(qubit), projector), identity(n - qubit - 1));
  return compose(adjoint(g), compose(p, g));
}

Probability measure_sim(const Circuit& c, const Bits& x, std::size_t qubit, const SimOptions& opts, SimStats* stats) {
  check_width(c, x, "input");
  if (qubit >= c.num_qubits)
    throw InvalidArgument("qubit " + std::to_string(qubit) + " out of range for " + std::to_string(c.num_qubits));
  return measure_prepared(compose(interpret(c), ket(x)), qubit, opts, stats);
}

ShiftResult recover_shift(const Circuit& c, const SimOptions& opts) {
  const PathSum g = compose(interpret(c), ket(Bits(c.num_qubits, 0)));
  ShiftResult out;
  for (std::size_t i = 0; i < c.num_qubits; ++i) {
    SimStats stats;
    Probability p = measure_prepared(g, i, opts, &stats);
    if (!p.is_zero() && !p.is_one()) throw NonDeterministicError(i, p.exact.to_rational_string());
    out.shift.push_back(p.is_one() ? 1 : 0);
    out.per_qubit_probability.push_back(std::move(p));
    out.rewrite_steps_total += stats.rewrite_steps;
    out.sandwich_vars.push_back(stats.initial_vars);
  }
  return out;
}

std::vector<Amplitude> statevector_oracle(const Circuit& c, const Bits& x, std::size_t max_qubits) {
  const std::size_t n = c.num_qubits;
  if (n > max_qubits)
    throw InvalidArgument("statevector oracle limited to " + std::to_string(max_qubits) + " qubits");
  check_width(c, x, "input");
  c.validate(SIZE_MAX);
  // Every amplitude is an integer times 2^(-h/2) after h Hadamards, so the
  // state is an integer vector with one shared exponent.
  const std::size_t dim = std::size_t{1} << n;
  std::vector<BigInt> state(dim, 0);
  state[bits_to_index(x)] = 1;
  std::int64_t half_exp = 0;
  auto bit_of = [n](Qubit q) { return std::size_t{1} << (n - 1 - q); };
  for (const auto& g : c.gates) {
    switch (g.kind) {
      case GateKind::H: {
        const std::size_t b = bit_of(g.qubits[0]);
        for (std::size_t i = 0; i < dim; ++i) {
          if (i & b) continue;
          BigInt lo = state[i], hi = state[i | b];
          state[i] = lo + hi;
          state[i | b] = lo - hi;
        }
        half_exp -= 1;
        break;
      }
      case GateKind::X: {
        const std::size_t b = bit_of(g.qubits[0]);
        for (std::size_t i = 0; i < dim; ++i)
          if (!(i & b)) std::swap(state[i], state[i | b]);
        break;
      }
      case GateKind::Z: {
        std::size_t mask = 0;
        for (Qubit q : g.qubits) mask |= bit_of(q);
        for (std::size_t i = 0; i < dim; ++i)
          if ((i & mask) == mask) state[i] = -state[i];
        break;
      }
      case GateKind::Swap: {
        const std::size_t a = bit_of(g.qubits[0]), b = bit_of(g.qubits[1]);
        for (std::size_t i = 0; i < dim; ++i)
          if ((i & a) && !(i & b)) std::swap(state[i], state[(i & ~a) | b]);
        break;
      }
    }
  }
  std::vector<Amplitude> out;
  out.reserve(dim);
  for (auto& v : state) out.emplace_back(std::move(v), half_exp);
  return out;
}

}  // namespace pathsum
