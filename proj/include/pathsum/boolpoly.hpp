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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <boost/container/small_vector.hpp>
#include "json.hpp"

namespace pathsum {

/// Index of a summation variable inside one path sum. Dense in 0..k-1.
using VarId = std::uint32_t;

/// A product of distinct variables. The empty product is the constant 1.
///
/// Variables are kept sorted ascending, so two monomials are equal iff their
/// storage is equal. Monomials order graded-lexicographically: by degree
/// first, then lexicographically by variable sequence.
class Monomial {
 public:
  using Storage = boost::container::small_vector<VarId, 4>;

  Monomial() = default;
  /// Sorts and deduplicates, so repeated variables collapse (v*v = v).
  Monomial(std::initializer_list<VarId> vars);
  explicit Monomial(std::span<const VarId> vars);

  /// Caller guarantees `vars` is strictly increasing.
  static Monomial from_sorted(Storage vars);

  std::span<const VarId> vars() const { return {vars_.data(), vars_.size()}; }
  std::size_t degree() const { return vars_.size(); }
  bool is_one() const { return vars_.empty(); }
  bool contains(VarId v) const;

  /// Multilinear product: the union of the variable sets.
  Monomial operator*(const Monomial& other) const;
  Monomial without(VarId v) const;

  /// Relabels through a strictly increasing map; order is preserved.
  template <typename F>
  Monomial relabel_monotone(F&& f) const {
    Monomial out;
    out.vars_.reserve(vars_.size());
    for (VarId v : vars_) out.vars_.push_back(f(v));
    return out;
  }

  bool operator==(const Monomial&) const = default;
  std::strong_ordering operator<=>(const Monomial& other) const;

  std::size_t hash() const;

 private:
  Storage vars_;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

/// Image of one variable under a simple map: `target` or `target + 1`.
struct SimpleImage {
  VarId target = 0;
  bool negate = false;
};

/// A multilinear polynomial over F2, stored as a strictly increasing list of
/// monomials. The zero polynomial has no monomials.
class BoolPoly {
 public:
  BoolPoly() = default;
  /// Reduces an arbitrary monomial list: duplicates cancel in pairs.
  explicit BoolPoly(std::vector<Monomial> monomials);
  BoolPoly(std::initializer_list<Monomial> monomials);

  /// Caller guarantees `monomials` is strictly increasing.
  static BoolPoly from_sorted(std::vector<Monomial> monomials);

  static BoolPoly zero() { return {}; }
  static BoolPoly one();
  static BoolPoly constant(bool c) { return c ? one() : zero(); }
  static BoolPoly variable(VarId v);

  const std::vector<Monomial>& monomials() const { return monomials_; }
  std::size_t size() const { return monomials_.size(); }
  bool is_zero() const { return monomials_.empty(); }
  bool is_one() const;
  bool is_constant() const;
  bool constant_term() const;
  std::size_t degree() const;
  bool contains_var(VarId v) const;

  /// Sorted, duplicate-free variable set.
  std::vector<VarId> vars() const;

  friend BoolPoly operator+(const BoolPoly& p, const BoolPoly& q);
  friend BoolPoly operator*(const BoolPoly& p, const BoolPoly& q);
  BoolPoly& operator+=(const BoolPoly& q);

  /// Returns (L, R) with p = x*L + R and x absent from both.
  std::pair<BoolPoly, BoolPoly> cofactor(VarId x) const;

  /// p[v <- q], computed as q*L + R from the cofactor at v.
  BoolPoly substitute(VarId v, const BoolPoly& q) const;

  /// Value at a point. Throws InvalidArgument if a variable is unassigned.
  bool eval_at(const std::map<VarId, bool>& assignment) const;

  /// Applies v -> target or target + 1. Throws InvalidArgument when the map
  /// misses a variable of p or sends two of them to the same target.
  BoolPoly apply_simple_map(const std::map<VarId, SimpleImage>& phi) const;
  /// Same, with phi indexed by variable. phi must cover vars().
  BoolPoly apply_simple_map(std::span<const SimpleImage> phi) const;

  /// Relabels through a strictly increasing map; order is preserved.
  template <typename F>
  BoolPoly relabel_monotone(F&& f) const {
    std::vector<Monomial> out;
    out.reserve(monomials_.size());
    for (const auto& m : monomials_) out.push_back(m.relabel_monotone(f));
    return from_sorted(std::move(out));
  }

  /// Adds `offset` to every variable index.
  BoolPoly shifted(VarId offset) const;

  bool operator==(const BoolPoly&) const = default;

  /// Compact form such as "x0*x2+x1+1"; "0" for the zero polynomial.
  std::string to_string() const;

 private:
  std::vector<Monomial> monomials_;
};

BoolPoly add(const BoolPoly& p, const BoolPoly& q);
BoolPoly mul(const BoolPoly& p, const BoolPoly& q);

/// Textual interchange form: a list of monomials, each a list of variables.
nlohmann::ordered_json poly_to_json(const BoolPoly& p);
BoolPoly poly_from_json(const nlohmann::json& j);

}  // namespace pathsum
