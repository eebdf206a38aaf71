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

#include <algorithm>

#include "pathsum/errors.hpp"
#include "pathsum/rewrite.hpp"

namespace pathsum {

namespace {

// Polynomials of a sum in a fixed order: phase, outputs, inputs.
std::vector<const BoolPoly*> polys_of(const PathSum& a) {
  std::vector<const BoolPoly*> out{&a.phase()};
  for (const auto& o : a.outputs()) out.push_back(&o);
  for (const auto& i : a.inputs()) out.push_back(&i);
  return out;
}

std::vector<Monomial> top_part(const BoolPoly& p) {
  std::vector<Monomial> out;
  const std::size_t d = p.degree();
  for (const auto& m : p.monomials())
    if (m.degree() == d && !p.is_zero()) out.push_back(m);
  return out;
}

// Simple maps preserve, for every polynomial, the largest degree among the
// monomials containing a given variable: the image of that monomial keeps
// its top term and nothing of higher degree can cancel it.
std::vector<std::vector<std::uint32_t>> profiles(const std::vector<const BoolPoly*>& polys, std::size_t k) {
  std::vector<std::vector<std::uint32_t>> prof(k, std::vector<std::uint32_t>(polys.size(), 0));
  for (std::size_t i = 0; i < polys.size(); ++i)
    for (const auto& m : polys[i]->monomials())
      for (VarId v : m.vars()) prof[v][i] = std::max<std::uint32_t>(prof[v][i], static_cast<std::uint32_t>(m.degree()));
  return prof;
}

class Matcher {
 public:
  Matcher(const PathSum& a, const PathSum& b)
      : a_(a),
        b_(b),
        k_(a.num_vars()),
        pa_(polys_of(a)),
        pb_(polys_of(b)),
        prof_a_(profiles(pa_, k_)),
        prof_b_(profiles(pb_, k_)),
        sigma_(k_, kUnset),
        used_(k_, 0) {
    for (std::size_t i = 0; i < pa_.size(); ++i) {
      top_a_.push_back(top_part(*pa_[i]));
      top_b_.push_back(top_part(*pb_[i]));
    }
  }

  bool run() {
    for (std::size_t i = 0; i < pa_.size(); ++i)
      if (pa_[i]->degree() != pb_[i]->degree() || top_a_[i].size() != top_b_[i].size() ||
          pa_[i]->vars().size() != pb_[i]->vars().size())
        return false;
    auto sa = prof_a_, sb = prof_b_;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;
    return assign(0);
  }

 private:
  static constexpr VarId kUnset = ~VarId{0};

  bool tops_consistent(VarId v) const {
    for (std::size_t i = 0; i < top_a_.size(); ++i)
      for (const auto& m : top_a_[i]) {
        if (!m.contains(v)) continue;
        bool complete = std::all_of(m.vars().begin(), m.vars().end(), [this](VarId u) { return sigma_[u] != kUnset; });
        if (!complete) continue;
        Monomial image(std::span<const VarId>(mapped(m)));
        if (!std::binary_search(top_b_[i].begin(), top_b_[i].end(), image)) return false;
      }
    return true;
  }

  std::vector<VarId> mapped(const Monomial& m) const {
    std::vector<VarId> out;
    for (VarId u : m.vars()) out.push_back(sigma_[u]);
    return out;
  }

  bool assign(VarId v) {
    if (v == k_) return negations_match();
    for (VarId w = 0; w < k_; ++w) {
      if (used_[w] || prof_a_[v] != prof_b_[w]) continue;
      sigma_[v] = w;
      used_[w] = 1;
      if (tops_consistent(v) && assign(v + 1)) return true;
      used_[w] = 0;
      sigma_[v] = kUnset;
    }
    return false;
  }

  bool negations_match() const {
    std::vector<SimpleImage> phi(k_);
    for (std::uint64_t neg = 0; neg < (std::uint64_t{1} << k_); ++neg) {
      for (VarId v = 0; v < k_; ++v) phi[v] = {sigma_[v], ((neg >> v) & 1u) != 0};
      if (apply_simple_transform(a_, phi) == b_) return true;
    }
    return false;
  }

  const PathSum& a_;
  const PathSum& b_;
  std::uint32_t k_;
  std::vector<const BoolPoly*> pa_, pb_;
  std::vector<std::vector<std::uint32_t>> prof_a_, prof_b_;
  std::vector<std::vector<Monomial>> top_a_, top_b_;
  std::vector<VarId> sigma_;
  std::vector<char> used_;
};

}  // namespace

bool simply_equivalent(const PathSum& a, const PathSum& b, std::size_t var_cap) {
  if (a.num_vars() > var_cap || b.num_vars() > var_cap)
    throw InvalidArgument("simply_equivalent: " + std::to_string(std::max(a.num_vars(), b.num_vars())) +
                          " variables exceed the search cap of " + std::to_string(var_cap));
  if (a == b) return true;
  if (!(a.scalar() == b.scalar()) || a.num_vars() != b.num_vars() || a.num_inputs() != b.num_inputs() ||
      a.num_outputs() != b.num_outputs())
    return false;
  return Matcher(a, b).run();
}

}  // namespace pathsum
