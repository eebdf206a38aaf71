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
#include "pathsum/pathsum.hpp"
#include "pathsum/rewrite.hpp"
#include "support.hpp"

using namespace pathsum;
using pathsum::testing::dense_unitary;
using pathsum::testing::draw;
using pathsum::testing::random_sum;

namespace {

BoolPoly v(VarId i) { return BoolPoly::variable(i); }
const BoolPoly one = BoolPoly::one();

PathSum hadamard() { return gate_sem(Gate::h(0)); }

Matrix column(std::size_t dim, std::size_t hot) {
  Matrix m(dim, 1);
  m.at(hot, 0) = Amplitude::one();
  return m;
}

Matrix scalar_matrix(const Amplitude& a) {
  Matrix m(1, 1);
  m.at(0, 0) = a;
  return m;
}

Matrix zeros(std::size_t r, std::size_t c) { return Matrix(r, c); }

}  // namespace

TEST_CASE("make") {
  const PathSum one_ket = make(Scalar::one(), 0, BoolPoly::zero(), {one}, {});
  CHECK(eval(one_ket) == column(2, 1));
  const PathSum h = make(Scalar::pow_sqrt2(-1), 2, v(0) * v(1), {v(1)}, {v(0)});
  CHECK(h == hadamard());
  CHECK_THROWS_AS(make(Scalar::one(), 2, v(5), {}, {}), InvalidArgument);
  CHECK_THROWS_AS(make(Scalar::one(), 2, BoolPoly::zero(), {v(2)}, {}), InvalidArgument);
}

TEST_CASE("identity and zero") {
  CHECK(eval(identity(0)) == scalar_matrix(Amplitude::one()));
  CHECK(eval(identity(2)) == Matrix::identity(4));
  CHECK(eval(zero_op(1, 1)) == zeros(2, 2));
  CHECK(eval(zero_op(0, 0)) == scalar_matrix(Amplitude::zero()));
  CHECK(eval(tensor(zero_op(1, 1), identity(1))) == zeros(4, 4));
  CHECK(eval(zero_op(2, 1)).rows() == 2);
  CHECK(eval(zero_op(2, 1)).cols() == 4);
}

TEST_CASE("kets and bras") {
  CHECK(eval(ket({1, 0})) == column(4, 2));
  CHECK(eval(compose(bra({1, 0, 1}), ket({1, 0, 1}))) == scalar_matrix(Amplitude::one()));
  CHECK(eval(compose(bra({0}), ket({1}))) == scalar_matrix(Amplitude::zero()));
  CHECK(adjoint(ket({0, 1})) == bra({0, 1}));
}

TEST_CASE("compose examples") {
  const PathSum h = hadamard();
  const PathSum x = gate_sem(Gate::x(0));
  CHECK(eval(compose(h, h)) == Matrix::identity(2));
  CHECK(eval(compose(x, x)) == Matrix::identity(2));
  CHECK(eval(compose(bra({0}), compose(h, ket({0})))) == scalar_matrix(Amplitude(1, -1)));
  CHECK_THROWS_AS(compose(identity(2), identity(1)), InvalidArgument);

  // Mediator layout: B's variables above A's, mediators last.
  const PathSum hh = compose(h, h);
  CHECK(hh.num_vars() == 5);
  CHECK(hh.scalar() == Scalar::pow_sqrt2(-4));
  CHECK(hh.phase() == v(0) * v(1) + v(2) * v(3) + v(4) * (v(3) + v(0)));
  CHECK(hh.outputs() == std::vector<BoolPoly>{v(1)});
  CHECK(hh.inputs() == std::vector<BoolPoly>{v(2)});
}

TEST_CASE("tensor and adjoint examples") {
  CHECK(eval(tensor(identity(1), identity(1))) == Matrix::identity(4));
  const PathSum hh = tensor(hadamard(), hadamard());
  const Matrix state = eval(compose(hh, ket({0, 0})));
  for (std::size_t i = 0; i < 4; ++i) CHECK(state.at(i, 0) == Amplitude(1, -2));
  CHECK(eval(adjoint(hadamard())) == eval(hadamard()).adjoint());
  const PathSum a = make(Scalar::pow_sqrt2(3), 3, v(0) * v(2) + v(1), {v(0) + one, v(2)}, {v(1)});
  CHECK(adjoint(adjoint(a)) == a);
}

TEST_CASE("eval examples") {
  Matrix ccz = Matrix::identity(8);
  ccz.at(7, 7) = Amplitude(-1);
  CHECK(eval(gate_sem(Gate::z({0, 1, 2}))) == ccz);

  Matrix swap(4, 4);
  swap.at(0, 0) = swap.at(3, 3) = swap.at(1, 2) = swap.at(2, 1) = Amplitude::one();
  CHECK(eval(gate_sem(Gate::swap(0, 1))) == swap);

  CHECK(eval(make(Scalar::one(), 1, v(0), {}, {})) == scalar_matrix(Amplitude::zero()));

  const PathSum big = make(Scalar::one(), 30, BoolPoly::zero(), {}, {});
  CHECK_THROWS_AS(eval(big), EvalGuardError);
  CHECK_THROWS_AS(eval(big, 29), EvalGuardError);
}

TEST_CASE("gate semantics") {
  Matrix h(2, 2);
  h.at(0, 0) = h.at(0, 1) = h.at(1, 0) = Amplitude(1, -1);
  h.at(1, 1) = Amplitude(-1, -1);
  CHECK(eval(hadamard()) == h);

  Matrix x(2, 2);
  x.at(0, 1) = x.at(1, 0) = Amplitude::one();
  CHECK(eval(gate_sem(Gate::x(0))) == x);

  Matrix cz = Matrix::identity(4);
  cz.at(3, 3) = Amplitude(-1);
  CHECK(eval(gate_sem(Gate::z({0, 1}))) == cz);

  for (const Gate& g : {Gate::h(0), Gate::x(0), Gate::z({0}), Gate::z({0, 1}), Gate::z({0, 1, 2}),
                        Gate::z({0, 1, 2, 3}), Gate::swap(0, 1)}) {
    const Matrix u = eval(gate_sem(g));
    CHECK(u.adjoint() * u == Matrix::identity(u.rows()));
  }
}

TEST_CASE("interpret") {
  CHECK(eval(interpret(Circuit{3, {}})) == Matrix::identity(8));
  CHECK(eval(interpret(Circuit{1, {Gate::h(0), Gate::h(0)}})) == Matrix::identity(2));
  CHECK_THROWS_AS(interpret(Circuit{2, {Gate::h(2)}}), InvalidArgument);

  // Qubit 0 is the most significant bit.
  const Matrix state = eval(compose(interpret(Circuit{2, {Gate::x(0)}}), ket({0, 0})));
  CHECK(state == column(4, 2));
}

TEST_CASE("interpret is the fold of compose over embedded gates") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const std::size_t n = 1 + seed % 5;
    const Circuit c = random_circuit(n, seed % 12, std::min<std::size_t>(2, n - 1), seed);
    PathSum fold = identity(n);
    for (std::size_t i = 0; i < c.gates.size(); ++i) {
      const PathSum layer = embed(gate_sem(c.gates[i]), c.gates[i].qubits, n);
      fold = i == 0 ? layer : compose(layer, fold);
    }
    CHECK(interpret(c) == fold);
  }
}

TEST_CASE("interpret matches the dense matrix product and the size bound") {
  int direct = 0;
  for (std::uint64_t seed = 0; seed < 120; ++seed) {
    std::mt19937_64 rng(seed);
    const std::size_t n = 1 + draw(rng, 5);
    const std::size_t depth = draw(rng, 21);
    const std::size_t m = std::min<std::size_t>(2, n - 1);
    const Circuit c = random_circuit(n, depth, m, seed);
    const PathSum a = interpret(c);
    const std::size_t k = c.gates.size();
    if (k > 0) CHECK(a.num_vars() <= (c.max_controls() + 1) * k + 2 * n * k);
    if (a.num_vars() <= 22) {
      CHECK(eval(a) == dense_unitary(c));
      ++direct;
    } else {
      // Too wide to expand as is; the rewrite engine shrinks it first.
      const PathSum nf = normalize(a).normal_form;
      if (nf.num_vars() <= 22) CHECK(eval(nf) == dense_unitary(c));
    }
  }
  CHECK(direct >= 30);
}

TEST_CASE("soundness of compose, tensor and adjoint") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t mid = draw(rng, 3);
    const std::size_t outs = draw(rng, 3);
    const std::size_t ins = draw(rng, 3);
    const PathSum a = random_sum(rng, static_cast<std::uint32_t>(draw(rng, 4)), outs, mid);
    const PathSum b = random_sum(rng, static_cast<std::uint32_t>(draw(rng, 4)), mid, ins);
    REQUIRE(a.num_vars() + b.num_vars() + mid <= 10);
    CHECK(eval(compose(a, b)) == eval(a) * eval(b));
    CHECK(eval(tensor(a, b)) == eval(a).kron(eval(b)));
    CHECK(eval(adjoint(a)) == eval(a).adjoint());
    CHECK(eval(compose(identity(outs), a)) == eval(a));
  }
}

TEST_CASE("simple transforms") {
  const PathSum a = make(Scalar::pow_sqrt2(-2), 3, v(0) * v(1) + v(2), {v(0) + v(2)}, {v(1)});
  std::vector<SimpleImage> id{{0, false}, {1, false}, {2, false}};
  CHECK(apply_simple_transform(a, id) == a);
  std::vector<SimpleImage> swap{{1, false}, {0, false}, {2, false}};
  CHECK(apply_simple_transform(apply_simple_transform(a, swap), swap) == a);
  std::vector<SimpleImage> bad{{1, false}, {1, true}, {2, false}};
  CHECK_THROWS_AS(apply_simple_transform(a, bad), InvalidArgument);
  std::vector<SimpleImage> short_map{{0, false}};
  CHECK_THROWS_AS(apply_simple_transform(a, short_map), InvalidArgument);

  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 200; ++trial) {
    const auto k = static_cast<std::uint32_t>(1 + draw(rng, 8));
    const PathSum s = random_sum(rng, k, draw(rng, 3), draw(rng, 3));
    std::vector<VarId> perm(k);
    for (VarId i = 0; i < k; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<SimpleImage> phi(k);
    for (VarId i = 0; i < k; ++i) phi[i] = {perm[i], draw(rng, 2) == 1};
    CHECK(eval(apply_simple_transform(s, phi)) == eval(s));
  }
}

TEST_CASE("JSON round trip") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 50; ++trial) {
    const PathSum s = random_sum(rng, static_cast<std::uint32_t>(draw(rng, 6)), draw(rng, 3), draw(rng, 3));
    const auto j = to_json(s);
    CHECK(path_sum_from_json(nlohmann::json::parse(j.dump())) == s);
  }
  const auto j = to_json(hadamard());
  CHECK(j.dump() ==
        R"({"scalar":{"zero":false,"half_exp":-1},"num_vars":2,"phase":[[0,1]],"outputs":[[[1]]],"inputs":[[[0]]]})");
  CHECK_THROWS_AS(path_sum_from_json(nlohmann::json::parse(R"({"num_vars":1})")), InvalidArgument);
}
