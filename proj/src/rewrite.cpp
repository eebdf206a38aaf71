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

#include "pathsum/rewrite.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "pathsum/errors.hpp"
#include "random.hpp"
#include "rewrite_internal.hpp"

namespace pathsum {

namespace {

std::vector<char> boundary_vars(const PathSum& a) {
  std::vector<char> in_boundary(a.num_vars(), 0);
  auto mark = [&](const BoolPoly& p) {
    for (const auto& m : p.monomials())
      for (VarId v : m.vars()) in_boundary[v] = 1;
  };
  for (const auto& o : a.outputs()) mark(o);
  for (const auto& i : a.inputs()) mark(i);
  return in_boundary;
}

BoolPoly drop_var(const BoolPoly& p, VarId x) {
  return p.relabel_monotone([x](VarId v) { return v > x ? v - 1 : v; });
}

std::vector<BoolPoly> substitute_all(const std::vector<BoolPoly>& ps, VarId y, const BoolPoly& q, VarId x) {
  std::vector<BoolPoly> out;
  out.reserve(ps.size());
  for (const auto& p : ps) out.push_back(drop_var(p.substitute(y, q), x));
  return out;
}

}  // namespace

std::string RewriteStep::to_string() const {
  std::ostringstream os;
  switch (rule) {
    case Rule::Elim: os << "ELIM x=" << pivot; break;
    case Rule::Z: os << "Z x=" << pivot; break;
    case Rule::HH:
      os << "HH pivot=" << pivot << " target=" << target.value_or(0)
         << " Q=" << (substituent ? substituent->to_string() : "0");
      break;
  }
  return os.str();
}

std::string format_trace(const std::vector<RewriteStep>& trace) {
  std::string out;
  for (const auto& s : trace) out += s.to_string() + "\n";
  return out;
}

std::vector<RewriteStep> find_rewrites(const PathSum& a) {
  const std::size_t k = a.num_vars();
  const auto in_boundary = boundary_vars(a);
  std::vector<std::vector<Monomial>> cofactors(k);
  for (const auto& m : a.phase().monomials())
    for (VarId v : m.vars())
      if (!in_boundary[v]) cofactors[v].push_back(m.without(v));
  std::vector<RewriteStep> out;
  for (VarId x = 0; x < k; ++x)
    if (!in_boundary[x]) detail::steps_from_cofactor(x, cofactors[x], out);
  return out;
}

PathSum apply_rewrite(const PathSum& a, const RewriteStep& step) {
  const VarId x = step.pivot;
  if (x >= a.num_vars()) throw StaleStepError("rewrite pivot " + std::to_string(x) + " out of range");
  std::vector<RewriteStep> valid;
  auto [l, r] = a.phase().cofactor(x);
  if (!boundary_vars(a)[x]) detail::steps_from_cofactor(x, l.monomials(), valid);
  if (std::find(valid.begin(), valid.end(), step) == valid.end())
    throw StaleStepError("rewrite '" + step.to_string() + "' does not apply");

  const std::uint32_t k = a.num_vars() - 1;
  switch (step.rule) {
    case Rule::Elim: {
      std::vector<BoolPoly> outs, ins;
      for (const auto& o : a.outputs()) outs.push_back(drop_var(o, x));
      for (const auto& i : a.inputs()) ins.push_back(drop_var(i, x));
      return make(a.scalar() * Scalar::pow_sqrt2(2), k, drop_var(a.phase(), x), std::move(outs), std::move(ins));
    }
    case Rule::Z:
      return zero_op(a.num_inputs(), a.num_outputs());
    case Rule::HH: {
      const VarId y = *step.target;
      const BoolPoly& q = *step.substituent;
      return make(a.scalar(), k, drop_var(r.substitute(y, q), x), substitute_all(a.outputs(), y, q, x),
                  substitute_all(a.inputs(), y, q, x));
    }
  }
  throw InternalError("unknown rewrite rule");
}

namespace detail {

Normalized normalize_reference(const PathSum& a) {
  Normalized out{a, {}};
  while (true) {
    auto steps = find_rewrites(out.normal_form);
    if (steps.empty()) break;
    out.normal_form = apply_rewrite(out.normal_form, steps.front());
    out.trace.push_back(std::move(steps.front()));
  }
  return out;
}

}  // namespace detail

Normalized normalize(const PathSum& a, const Strategy& strategy) {
  if (strategy.kind == Strategy::Kind::DeterministicFirst) return detail::normalize_incremental(a);
  std::mt19937_64 rng(strategy.seed);
  Normalized out{a, {}};
  while (true) {
    auto steps = find_rewrites(out.normal_form);
    if (steps.empty()) break;
    auto& step = steps[detail::uniform_below(rng, steps.size())];
    out.normal_form = apply_rewrite(out.normal_form, step);
    out.trace.push_back(std::move(step));
  }
  return out;
}

}  // namespace pathsum
