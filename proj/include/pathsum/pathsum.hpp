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
#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "pathsum/amplitude.hpp"
#include "pathsum/bits.hpp"
#include "pathsum/boolpoly.hpp"

namespace pathsum {

/// Either exactly zero or 2^(e/2).
struct Scalar {
  bool zero = false;
  std::int64_t half_exp = 0;

  static Scalar one() { return {}; }
  static Scalar zero_value() { return {true, 0}; }
  static Scalar pow_sqrt2(std::int64_t e) { return {false, e}; }

  Scalar normalized() const { return zero ? Scalar{true, 0} : *this; }
  Amplitude value() const { return zero ? Amplitude::zero() : Amplitude(1, half_exp); }

  friend Scalar operator*(Scalar a, Scalar b) {
    if (a.zero || b.zero) return zero_value();
    return {false, a.half_exp + b.half_exp};
  }
  bool operator==(const Scalar& other) const {
    return zero == other.zero && (zero || half_exp == other.half_exp);
  }
};

/// s * sum over k variables of (-1)^P |O_1..O_m><I_1..I_n|, signature n -> m.
///
/// Summation variables are 0..k-1. Every polynomial may mention only those.
class PathSum {
 public:
  /// The empty-signature sum with no variables and scalar 1.
  PathSum() = default;
  /// Throws InvalidArgument if a polynomial mentions a variable >= num_vars.
  PathSum(Scalar scalar, std::uint32_t num_vars, BoolPoly phase, std::vector<BoolPoly> outputs,
          std::vector<BoolPoly> inputs);

  const Scalar& scalar() const { return scalar_; }
  std::uint32_t num_vars() const { return num_vars_; }
  const BoolPoly& phase() const { return phase_; }
  const std::vector<BoolPoly>& outputs() const { return outputs_; }
  const std::vector<BoolPoly>& inputs() const { return inputs_; }
  std::size_t num_inputs() const { return inputs_.size(); }
  std::size_t num_outputs() const { return outputs_.size(); }

  /// Structural equality, not semantic equality.
  bool operator==(const PathSum&) const = default;

 private:
  Scalar scalar_;
  std::uint32_t num_vars_ = 0;
  BoolPoly phase_;
  std::vector<BoolPoly> outputs_;
  std::vector<BoolPoly> inputs_;
};

PathSum make(Scalar scalar, std::uint32_t num_vars, BoolPoly phase, std::vector<BoolPoly> outputs,
             std::vector<BoolPoly> inputs);

PathSum identity(std::size_t n);
/// Scalar zero with signature n -> m: m zero outputs, n zero inputs.
PathSum zero_op(std::size_t n_inputs, std::size_t m_outputs);
PathSum ket(const Bits& bits);
PathSum bra(const Bits& bits);

/// a o b: apply b, then a. Throws InvalidArgument on a signature mismatch.
PathSum compose(const PathSum& a, const PathSum& b);
PathSum tensor(const PathSum& a, const PathSum& b);
PathSum adjoint(const PathSum& a);

/// Applies v -> phi[v].target (+1 if negated) to every polynomial. phi must
/// be a bijection on 0..k-1; throws InvalidArgument otherwise.
PathSum apply_simple_transform(const PathSum& a, std::span<const SimpleImage> phi);

/// Dense 2^m x 2^n matrix of exact amplitudes, row-major.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Amplitude& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  Amplitude& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }

  static Matrix identity(std::size_t dim);

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  Matrix kron(const Matrix& b) const;
  Matrix adjoint() const;
  bool operator==(const Matrix&) const = default;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Amplitude> entries_;
};

/// Path sums above this many variables are never expanded densely.
inline constexpr std::size_t kDefaultMaxEvalVars = 24;

/// Brute-force sum over all 2^k assignments. Throws EvalGuardError when
/// num_vars exceeds max_vars.
Matrix eval(const PathSum& a, std::size_t max_vars = kDefaultMaxEvalVars);

/// Object with keys scalar, num_vars, phase, outputs, inputs in that order.
nlohmann::ordered_json to_json(const PathSum& a);
PathSum path_sum_from_json(const nlohmann::json& j);

}  // namespace pathsum
