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

#include "pathsum/boolpoly.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "pathsum/errors.hpp"

namespace pathsum {

namespace {

// Sorts a monomial list and cancels equal monomials in pairs.
std::vector<Monomial> reduce_mod2(std::vector<Monomial> ms) {
  if (!std::is_sorted(ms.begin(), ms.end())) std::sort(ms.begin(), ms.end());
  std::size_t keep = 0;
  for (std::size_t i = 0; i < ms.size();) {
    std::size_t j = i + 1;
    while (j < ms.size() && ms[j] == ms[i]) ++j;
    if ((j - i) % 2 == 1) {
      if (keep != i) ms[keep] = std::move(ms[i]);
      ++keep;
    }
    i = j;
  }
  ms.erase(ms.begin() + static_cast<std::ptrdiff_t>(keep), ms.end());
  return ms;
}

}  // namespace

Monomial::Monomial(std::initializer_list<VarId> vars) : Monomial(std::span<const VarId>(vars.begin(), vars.size())) {}

Monomial::Monomial(std::span<const VarId> vars) : vars_(vars.begin(), vars.end()) {
  std::sort(vars_.begin(), vars_.end());
  vars_.erase(std::unique(vars_.begin(), vars_.end()), vars_.end());
}

Monomial Monomial::from_sorted(Storage vars) {
  Monomial m;
  m.vars_ = std::move(vars);
  return m;
}

bool Monomial::contains(VarId v) const { return std::binary_search(vars_.begin(), vars_.end(), v); }

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out;
  out.vars_.reserve(vars_.size() + other.vars_.size());
  std::set_union(vars_.begin(), vars_.end(), other.vars_.begin(), other.vars_.end(),
                 std::back_inserter(out.vars_));
  return out;
}

Monomial Monomial::without(VarId v) const {
  Monomial out;
  out.vars_.reserve(vars_.size());
  for (VarId u : vars_)
    if (u != v) out.vars_.push_back(u);
  return out;
}

std::strong_ordering Monomial::operator<=>(const Monomial& other) const {
  if (auto c = vars_.size() <=> other.vars_.size(); c != 0) return c;
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (auto c = vars_[i] <=> other.vars_[i]; c != 0) return c;
  return std::strong_ordering::equal;
}

std::size_t Monomial::hash() const {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ vars_.size();
  for (VarId v : vars_) {
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h *= 0xff51afd7ed558ccdULL;
  }
  return static_cast<std::size_t>(h ^ (h >> 33));
}

BoolPoly::BoolPoly(std::vector<Monomial> monomials) : monomials_(reduce_mod2(std::move(monomials))) {}

BoolPoly::BoolPoly(std::initializer_list<Monomial> monomials)
    : BoolPoly(std::vector<Monomial>(monomials)) {}

BoolPoly BoolPoly::from_sorted(std::vector<Monomial> monomials) {
  BoolPoly p;
  p.monomials_ = std::move(monomials);
  return p;
}

BoolPoly BoolPoly::one() { return from_sorted({Monomial{}}); }

BoolPoly BoolPoly::variable(VarId v) { return from_sorted({Monomial{v}}); }

bool BoolPoly::is_one() const { return monomials_.size() == 1 && monomials_[0].is_one(); }

bool BoolPoly::is_constant() const { return monomials_.empty() || is_one(); }

bool BoolPoly::constant_term() const { return !monomials_.empty() && monomials_.front().is_one(); }

std::size_t BoolPoly::degree() const { return monomials_.empty() ? 0 : monomials_.back().degree(); }

bool BoolPoly::contains_var(VarId v) const {
  return std::any_of(monomials_.begin(), monomials_.end(), [v](const Monomial& m) { return m.contains(v); });
}

std::vector<VarId> BoolPoly::vars() const {
  std::vector<VarId> out;
  for (const auto& m : monomials_) out.insert(out.end(), m.vars().begin(), m.vars().end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

BoolPoly operator+(const BoolPoly& p, const BoolPoly& q) {
  std::vector<Monomial> out;
  out.reserve(p.monomials_.size() + q.monomials_.size());
  std::set_symmetric_difference(p.monomials_.begin(), p.monomials_.end(), q.monomials_.begin(),
                                q.monomials_.end(), std::back_inserter(out));
  return BoolPoly::from_sorted(std::move(out));
}

BoolPoly operator*(const BoolPoly& p, const BoolPoly& q) {
  if (p.is_zero() || q.is_zero()) return {};
  if (p.is_one()) return q;
  if (q.is_one()) return p;
  std::vector<Monomial> products;
  products.reserve(p.monomials_.size() * q.monomials_.size());
  for (const auto& a : p.monomials_)
    for (const auto& b : q.monomials_) products.push_back(a * b);
  return BoolPoly(std::move(products));
}

BoolPoly& BoolPoly::operator+=(const BoolPoly& q) {
  *this = *this + q;
  return *this;
}

BoolPoly add(const BoolPoly& p, const BoolPoly& q) { return p + q; }
BoolPoly mul(const BoolPoly& p, const BoolPoly& q) { return p * q; }

std::pair<BoolPoly, BoolPoly> BoolPoly::cofactor(VarId x) const {
  std::vector<Monomial> with;
  std::vector<Monomial> rest;
  for (const auto& m : monomials_) {
    if (m.contains(x))
      with.push_back(m.without(x));
    else
      rest.push_back(m);
  }
  // Removing the same variable from distinct monomials keeps them distinct,
  // but may break the graded order.
  std::sort(with.begin(), with.end());
  return {from_sorted(std::move(with)), from_sorted(std::move(rest))};
}

BoolPoly BoolPoly::substitute(VarId v, const BoolPoly& q) const {
  auto [l, r] = cofactor(v);
  if (l.is_zero()) return *this;
  return q * l + r;
}

bool BoolPoly::eval_at(const std::map<VarId, bool>& assignment) const {
  bool value = false;
  for (const auto& m : monomials_) {
    bool term = true;
    for (VarId v : m.vars()) {
      auto it = assignment.find(v);
      if (it == assignment.end())
        throw InvalidArgument("eval_at: no value assigned to variable " + std::to_string(v));
      term = term && it->second;
    }
    value ^= term;
  }
  return value;
}

BoolPoly BoolPoly::apply_simple_map(const std::map<VarId, SimpleImage>& phi) const {
  std::set<VarId> targets;
  for (VarId v : vars()) {
    auto it = phi.find(v);
    if (it == phi.end()) throw InvalidArgument("simple map undefined on variable " + std::to_string(v));
    if (!targets.insert(it->second.target).second)
      throw InvalidArgument("simple map is not injective on the polynomial's variables");
  }
  std::vector<Monomial> out;
  for (const auto& m : monomials_) {
    // Expand prod (w_i + c_i): every subset of the negated factors drops out.
    std::vector<Monomial> terms{Monomial{}};
    for (VarId v : m.vars()) {
      const SimpleImage& img = phi.at(v);
      std::vector<Monomial> next;
      next.reserve(terms.size() * (img.negate ? 2 : 1));
      for (const auto& t : terms) {
        next.push_back(t * Monomial{img.target});
        if (img.negate) next.push_back(t);
      }
      terms = std::move(next);
    }
    out.insert(out.end(), terms.begin(), terms.end());
  }
  return BoolPoly(std::move(out));
}

BoolPoly BoolPoly::apply_simple_map(std::span<const SimpleImage> phi) const {
  std::map<VarId, SimpleImage> m;
  for (VarId v : vars()) {
    if (v >= phi.size()) throw InvalidArgument("simple map undefined on variable " + std::to_string(v));
    m.emplace(v, phi[v]);
  }
  return apply_simple_map(m);
}

BoolPoly BoolPoly::shifted(VarId offset) const {
  if (offset == 0) return *this;
  return relabel_monotone([offset](VarId v) { return v + offset; });
}

std::string BoolPoly::to_string() const {
  if (monomials_.empty()) return "0";
  std::ostringstream os;
  // Highest degree first reads naturally.
  for (auto it = monomials_.rbegin(); it != monomials_.rend(); ++it) {
    if (it != monomials_.rbegin()) os << '+';
    if (it->is_one()) {
      os << '1';
      continue;
    }
    bool first = true;
    for (VarId v : it->vars()) {
      if (!first) os << '*';
      os << 'x' << v;
      first = false;
    }
  }
  return os.str();
}

nlohmann::ordered_json poly_to_json(const BoolPoly& p) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const auto& m : p.monomials()) {
    nlohmann::ordered_json mono = nlohmann::ordered_json::array();
    for (VarId v : m.vars()) mono.push_back(v);
    out.push_back(std::move(mono));
  }
  return out;
}

BoolPoly poly_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw InvalidArgument("polynomial must be a JSON array of monomials");
  std::vector<Monomial> ms;
  for (const auto& mono : j) {
    if (!mono.is_array()) throw InvalidArgument("monomial must be a JSON array of variable indices");
    std::vector<VarId> vs;
    for (const auto& v : mono) {
      if (!v.is_number_unsigned()) throw InvalidArgument("variable index must be a nonnegative integer");
      vs.push_back(v.get<VarId>());
    }
    std::vector<VarId> sorted = vs;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw InvalidArgument("monomial repeats a variable");
    ms.emplace_back(std::span<const VarId>(vs));
  }
  return BoolPoly(std::move(ms));
}

}  // namespace pathsum
