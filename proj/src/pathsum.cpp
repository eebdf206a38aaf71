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

#include "pathsum/pathsum.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "pathsum/errors.hpp"

namespace pathsum {

namespace {

void check_range(const BoolPoly& p, std::uint32_t num_vars, const char* where) {
  for (const auto& m : p.monomials())
    if (!m.is_one() && m.vars().back() >= num_vars)
      throw InvalidArgument(std::string("path sum ") + where + " mentions variable " +
                            std::to_string(m.vars().back()) + " but the sum has only " + std::to_string(num_vars) +
                            " variables");
}

std::vector<BoolPoly> shifted_all(const std::vector<BoolPoly>& ps, VarId offset) {
  std::vector<BoolPoly> out;
  out.reserve(ps.size());
  for (const auto& p : ps) out.push_back(p.shifted(offset));
  return out;
}

// Monomials as bit masks over the assignment word.
std::vector<std::uint64_t> masks_of(const BoolPoly& p) {
  std::vector<std::uint64_t> out;
  out.reserve(p.size());
  for (const auto& m : p.monomials()) {
    std::uint64_t mask = 0;
    for (VarId v : m.vars()) mask |= std::uint64_t{1} << v;
    out.push_back(mask);
  }
  return out;
}

inline unsigned parity_at(const std::vector<std::uint64_t>& masks, std::uint64_t point) {
  unsigned acc = 0;
  for (std::uint64_t mask : masks) acc ^= static_cast<unsigned>((point & mask) == mask);
  return acc;
}

}  // namespace

PathSum::PathSum(Scalar scalar, std::uint32_t num_vars, BoolPoly phase, std::vector<BoolPoly> outputs,
                 std::vector<BoolPoly> inputs)
    : scalar_(scalar.normalized()),
      num_vars_(num_vars),
      phase_(std::move(phase)),
      outputs_(std::move(outputs)),
      inputs_(std::move(inputs)) {
  check_range(phase_, num_vars_, "phase");
  for (const auto& o : outputs_) check_range(o, num_vars_, "output");
  for (const auto& i : inputs_) check_range(i, num_vars_, "input");
}

PathSum make(Scalar scalar, std::uint32_t num_vars, BoolPoly phase, std::vector<BoolPoly> outputs,
             std::vector<BoolPoly> inputs) {
  return PathSum(scalar, num_vars, std::move(phase), std::move(outputs), std::move(inputs));
}

PathSum identity(std::size_t n) {
  std::vector<BoolPoly> wires;
  wires.reserve(n);
  for (std::size_t i = 0; i < n; ++i) wires.push_back(BoolPoly::variable(static_cast<VarId>(i)));
  return PathSum(Scalar::one(), static_cast<std::uint32_t>(n), BoolPoly::zero(), wires, wires);
}

PathSum zero_op(std::size_t n_inputs, std::size_t m_outputs) {
  return PathSum(Scalar::zero_value(), 0, BoolPoly::zero(), std::vector<BoolPoly>(m_outputs),
                 std::vector<BoolPoly>(n_inputs));
}

PathSum ket(const Bits& bits) {
  std::vector<BoolPoly> outs;
  outs.reserve(bits.size());
  for (auto b : bits) outs.push_back(BoolPoly::constant(b != 0));
  return PathSum(Scalar::one(), 0, BoolPoly::zero(), std::move(outs), {});
}

PathSum bra(const Bits& bits) { return adjoint(ket(bits)); }

PathSum compose(const PathSum& a, const PathSum& b) {
  const std::size_t m = a.num_inputs();
  if (m != b.num_outputs())
    throw InvalidArgument("compose: left operand takes " + std::to_string(m) + " inputs but right operand has " +
                          std::to_string(b.num_outputs()) + " outputs");
  const VarId b_offset = a.num_vars();
  const VarId mediator0 = a.num_vars() + b.num_vars();
  BoolPoly phase = a.phase() + b.phase().shifted(b_offset);
  std::vector<Monomial> couplings;
  for (std::size_t i = 0; i < m; ++i) {
    const Monomial y{static_cast<VarId>(mediator0 + i)};
    const BoolPoly out_b = b.outputs()[i].shifted(b_offset);
    for (const auto& mono : out_b.monomials()) couplings.push_back(y * mono);
    for (const auto& mono : a.inputs()[i].monomials()) couplings.push_back(y * mono);
  }
  phase += BoolPoly(std::move(couplings));
  Scalar s = a.scalar() * b.scalar() * Scalar::pow_sqrt2(-2 * static_cast<std::int64_t>(m));
  return PathSum(s, static_cast<std::uint32_t>(mediator0 + m), std::move(phase), a.outputs(),
                 shifted_all(b.inputs(), b_offset));
}

PathSum tensor(const PathSum& a, const PathSum& b) {
  const VarId offset = a.num_vars();
  std::vector<BoolPoly> outs = a.outputs();
  for (const auto& o : b.outputs()) outs.push_back(o.shifted(offset));
  std::vector<BoolPoly> ins = a.inputs();
  for (const auto& i : b.inputs()) ins.push_back(i.shifted(offset));
  return PathSum(a.scalar() * b.scalar(), a.num_vars() + b.num_vars(), a.phase() + b.phase().shifted(offset),
                 std::move(outs), std::move(ins));
}

PathSum adjoint(const PathSum& a) {
  return PathSum(a.scalar(), a.num_vars(), a.phase(), a.inputs(), a.outputs());
}

PathSum apply_simple_transform(const PathSum& a, std::span<const SimpleImage> phi) {
  const std::size_t k = a.num_vars();
  if (phi.size() != k)
    throw InvalidArgument("simple transform must map each of the " + std::to_string(k) + " variables");
  std::vector<char> hit(k, 0);
  for (const auto& img : phi) {
    if (img.target >= k || hit[img.target]) throw InvalidArgument("simple transform is not a bijection");
    hit[img.target] = 1;
  }
  std::vector<BoolPoly> outs;
  for (const auto& o : a.outputs()) outs.push_back(o.apply_simple_map(phi));
  std::vector<BoolPoly> ins;
  for (const auto& i : a.inputs()) ins.push_back(i.apply_simple_map(phi));
  return PathSum(a.scalar(), a.num_vars(), a.phase().apply_simple_map(phi), std::move(outs), std::move(ins));
}

Matrix Matrix::identity(std::size_t dim) {
  Matrix out(dim, dim);
  for (std::size_t i = 0; i < dim; ++i) out.at(i, i) = Amplitude::one();
  return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw InvalidArgument("matrix product: dimension mismatch");
  Matrix out(a.rows_, b.cols_);
  for (std::size_t r = 0; r < a.rows_; ++r)
    for (std::size_t j = 0; j < a.cols_; ++j) {
      const Amplitude& x = a.at(r, j);
      if (x.is_zero()) continue;
      for (std::size_t c = 0; c < b.cols_; ++c)
        if (!b.at(j, c).is_zero()) out.at(r, c) += x * b.at(j, c);
    }
  return out;
}

Matrix Matrix::kron(const Matrix& b) const {
  Matrix out(rows_ * b.rows_, cols_ * b.cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      for (std::size_t br = 0; br < b.rows_; ++br)
        for (std::size_t bc = 0; bc < b.cols_; ++bc)
          out.at(r * b.rows_ + br, c * b.cols_ + bc) = at(r, c) * b.at(br, bc);
  return out;
}

Matrix Matrix::adjoint() const {
  Matrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out.at(c, r) = at(r, c).conj();
  return out;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  for (std::size_t r = 0; r < rows_; ++r) {
    os << '[';
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? ", " : "") << at(r, c).to_string();
    os << "]\n";
  }
  return os.str();
}

Matrix eval(const PathSum& a, std::size_t max_vars) {
  const std::size_t k = a.num_vars();
  if (k > max_vars || k > 62) throw EvalGuardError(k, std::min<std::size_t>(max_vars, 62));
  const std::size_t m = a.num_outputs();
  const std::size_t n = a.num_inputs();
  if (m + n > 30) throw InvalidArgument("eval: a " + std::to_string(n) + " -> " + std::to_string(m) +
                                        " operator is too large for a dense matrix");
  const std::size_t rows = std::size_t{1} << m;
  const std::size_t cols = std::size_t{1} << n;
  Matrix out(rows, cols);
  if (a.scalar().zero) return out;

  const auto phase = masks_of(a.phase());
  std::vector<std::vector<std::uint64_t>> outs, ins;
  for (const auto& o : a.outputs()) outs.push_back(masks_of(o));
  for (const auto& i : a.inputs()) ins.push_back(masks_of(i));

  std::vector<std::int64_t> counts(rows * cols, 0);
  const std::uint64_t points = std::uint64_t{1} << k;
  for (std::uint64_t v = 0; v < points; ++v) {
    std::size_t row = 0;
    for (const auto& o : outs) row = (row << 1) | parity_at(o, v);
    std::size_t col = 0;
    for (const auto& i : ins) col = (col << 1) | parity_at(i, v);
    counts[row * cols + col] += parity_at(phase, v) ? -1 : 1;
  }
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      if (counts[r * cols + c] != 0) out.at(r, c) = Amplitude(BigInt(counts[r * cols + c]), a.scalar().half_exp);
  return out;
}

nlohmann::ordered_json to_json(const PathSum& a) {
  nlohmann::ordered_json j;
  j["scalar"] = {{"zero", a.scalar().zero}, {"half_exp", a.scalar().half_exp}};
  j["num_vars"] = a.num_vars();
  j["phase"] = poly_to_json(a.phase());
  nlohmann::ordered_json outs = nlohmann::ordered_json::array();
  for (const auto& o : a.outputs()) outs.push_back(poly_to_json(o));
  j["outputs"] = std::move(outs);
  nlohmann::ordered_json ins = nlohmann::ordered_json::array();
  for (const auto& i : a.inputs()) ins.push_back(poly_to_json(i));
  j["inputs"] = std::move(ins);
  return j;
}

PathSum path_sum_from_json(const nlohmann::json& j) {
  try {
    const auto& s = j.at("scalar");
    Scalar scalar{s.at("zero").get<bool>(), s.at("half_exp").get<std::int64_t>()};
    std::vector<BoolPoly> outs, ins;
    for (const auto& o : j.at("outputs")) outs.push_back(poly_from_json(o));
    for (const auto& i : j.at("inputs")) ins.push_back(poly_from_json(i));
    return PathSum(scalar, j.at("num_vars").get<std::uint32_t>(), poly_from_json(j.at("phase")), std::move(outs),
                   std::move(ins));
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("malformed path sum JSON: ") + e.what());
  }
}

}  // namespace pathsum
