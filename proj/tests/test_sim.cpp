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

#include <random>

#include "doctest.h"
#include "pathsum/errors.hpp"
#include "pathsum/interpret.hpp"
#include "pathsum/rewrite.hpp"
#include "pathsum/sim.hpp"
#include "support.hpp"

using namespace pathsum;
using pathsum::testing::dense_unitary;
using pathsum::testing::draw;

namespace {

Amplitude marginal_one(const std::vector<Amplitude>& state, std::size_t n, std::size_t qubit) {
  Amplitude p;
  for (std::size_t i = 0; i < state.size(); ++i)
    if ((i >> (n - 1 - qubit)) & 1u) p += state[i] * state[i];
  return p;
}

}  // namespace

TEST_CASE("strong_sim examples") {
  CHECK(strong_sim(Circuit{1, {Gate::h(0)}}, {0}, {1}) == Amplitude(1, -1));
  CHECK(strong_sim(Circuit{3, {Gate::z({0, 1, 2})}}, {1, 1, 1}, {1, 1, 1}) == Amplitude(-1));
  CHECK(strong_sim(Circuit{1, {Gate::x(0)}}, {0}, {0}) == Amplitude::zero());
  CHECK(strong_sim(Circuit{0, {}}, {}, {}) == Amplitude::one());
  CHECK_THROWS_AS(strong_sim(Circuit{2, {}}, {0}, {0, 0}), InvalidArgument);
}

TEST_CASE("eval guard reports the residual size") {
  const Circuit c = parse_circuit("qubits 3\nh 0\nh 1\nh 2\nz 0 1 2\nh 0\nh 1\nh 2\n");
  SimStats stats;
  CHECK(strong_sim(c, {0, 0, 0}, {0, 0, 0}, {}, &stats) == Amplitude(3, -4));
  CHECK(stats.residual_vars == 3);
  try {
    strong_sim(c, {0, 0, 0}, {0, 0, 0}, SimOptions{2});
    FAIL("expected the guard to trip");
  } catch (const EvalGuardError& e) {
    CHECK(e.residual_vars() == 3);
    CHECK(e.limit() == 2);
  }
}

TEST_CASE("measure_sim examples") {
  CHECK(measure_sim(Circuit{1, {Gate::x(0)}}, {0}, 0).is_one());
  CHECK(measure_sim(Circuit{1, {Gate::h(0)}}, {0}, 0).exact == Amplitude(1, -2));
  CHECK(measure_sim(Circuit{1, {Gate::h(0)}}, {0}, 0).decimal() == 0.5);
  CHECK(measure_sim(Circuit{2, {Gate::x(1)}}, {0, 0}, 0).is_zero());
  CHECK_THROWS_AS(measure_sim(Circuit{1, {}}, {0}, 1), InvalidArgument);
}

TEST_CASE("statevector oracle examples") {
  CHECK(statevector_oracle(Circuit{1, {Gate::x(0)}}, {0}) == std::vector<Amplitude>{Amplitude::zero(), Amplitude::one()});
  CHECK(statevector_oracle(Circuit{1, {Gate::h(0)}}, {0}) == std::vector<Amplitude>{Amplitude(1, -1), Amplitude(1, -1)});
  CHECK_THROWS_AS(statevector_oracle(Circuit{15, {}}, Bits(15, 0)), InvalidArgument);
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const Circuit c = random_circuit(4, 30, 2, seed);
    Amplitude norm;
    for (const auto& a : statevector_oracle(c, index_to_bits(seed % 16, 4))) norm += a * a;
    CHECK(norm == Amplitude::one());
  }
}

TEST_CASE("oracle agrees with the matrix-product oracle") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Circuit c = random_circuit(3, 15, 2, seed);
    const Matrix u = dense_unitary(c);
    for (std::uint64_t x = 0; x < 8; ++x) {
      const auto state = statevector_oracle(c, index_to_bits(x, 3));
      for (std::uint64_t y = 0; y < 8; ++y) REQUIRE(state[y] == u.at(y, x));
    }
  }
}

TEST_CASE("strong_sim and measure_sim match the oracle") {
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + draw(rng, 5);
    const Circuit c = random_circuit(n, draw(rng, 26), std::min<std::size_t>(2, n - 1), rng());
    const std::uint64_t dim = std::uint64_t{1} << n;
    const std::uint64_t x = draw(rng, dim);
    const auto state = statevector_oracle(c, index_to_bits(x, n));
    for (std::uint64_t y = 0; y < dim; ++y)
      REQUIRE(strong_sim(c, index_to_bits(x, n), index_to_bits(y, n)) == state[y]);
    for (std::size_t q = 0; q < n; ++q)
      REQUIRE(measure_sim(c, index_to_bits(x, n), q).exact == marginal_one(state, n, q));
  }
}

TEST_CASE("recover_shift examples") {
  const auto two = recover_shift(hidden_shift_circuit(HiddenShiftSpec{2, {}, parse_bits("10"), {}}));
  CHECK(two.shift == parse_bits("10"));

  const Circuit four = hidden_shift_circuit(HiddenShiftSpec{4, {{0, 1}}, parse_bits("0110"), {}});
  CHECK(recover_shift(four).shift == parse_bits("0110"));

  const HiddenShiftSpec spec{8, {{0, 1, 2}, {3}}, parse_bits("10110001"), {}};
  const Circuit eight = hidden_shift_circuit(spec);
  const auto r = recover_shift(eight);
  CHECK(r.shift == spec.shift);
  const auto state = statevector_oracle(eight, Bits(8, 0));
  CHECK(state[bits_to_index(spec.shift)] == Amplitude::one());
  for (std::size_t q = 0; q < 8; ++q) CHECK(r.per_qubit_probability[q].exact == marginal_one(state, 8, q));

  try {
    recover_shift(Circuit{1, {Gate::h(0)}});
    FAIL("expected a nondeterministic instance");
  } catch (const NonDeterministicError& e) {
    CHECK(e.qubit() == 0);
    CHECK(e.probability() == "1/2");
  }
}

TEST_CASE("hidden shift instances reduce fully within the step budget") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const std::size_t n = 2 * (1 + seed % 8);
    const std::size_t h = n / 2;
    const std::size_t max_cubic = h < 3 ? 0 : h * (h - 1) * (h - 2) / 6;
    const auto spec = random_hidden_shift_spec(n, std::min<std::size_t>(seed % 5, max_cubic), seed % 2 == 1, seed);
    const Circuit c = hidden_shift_circuit(spec);
    const PathSum f = compose(interpret(c), ket(Bits(n, 0)));
    const auto nf = normalize(f);
    CHECK(nf.normal_form.num_vars() == 0);
    CHECK(nf.normal_form.scalar() == Scalar::one());
    CHECK(nf.normal_form == ket(spec.shift));
    CHECK(nf.trace.size() <= f.num_vars());

    const auto r = recover_shift(c);
    CHECK(r.shift == spec.shift);
    std::size_t widest = 0, budget = 0;
    for (std::size_t v : r.sandwich_vars) {
      widest = std::max(widest, v);
      budget += v;
    }
    CHECK(r.rewrite_steps_total <= budget);
    CHECK(r.rewrite_steps_total <= n * widest);
    for (const auto& p : r.per_qubit_probability) CHECK((p.is_zero() || p.is_one()));
  }
}
