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

// Incremental deterministic-first normalization.
//
// The reference loop rescans the whole path sum after every step. Here the
// phase lives in a hash set of monomials with per-variable occurrence lists,
// variables keep their original ids until the end, and only variables that
// share a monomial or a boundary polynomial with a rewritten one are
// re-examined. The chosen step is always the applicable one with the smallest
// pivot, so traces match the reference exactly once ids are translated to
// dense ranks.

#include <algorithm>
#include <functional>
#include <optional>
#include <queue>

#include <boost/container/small_vector.hpp>

#include "pathsum/errors.hpp"
#include "pathsum/rewrite.hpp"

namespace pathsum::detail {

namespace {

class RankTree {
 public:
  explicit RankTree(std::size_t n) : tree_(n + 1, 0) {
    for (std::size_t i = 0; i < n; ++i) add(i, 1);
  }
  void add(std::size_t i, int delta) {
    for (++i; i < tree_.size(); i += i & (~i + 1)) tree_[i] += delta;
  }
  // Number of live entries strictly below i.
  std::uint32_t rank(std::size_t i) const {
    int s = 0;
    for (; i > 0; i -= i & (~i + 1)) s += tree_[i];
    return static_cast<std::uint32_t>(s);
  }

 private:
  std::vector<int> tree_;
};

// Open-addressing set of monomial ids, keyed by the monomial they name.
// Deleted slots become tombstones; the table is rebuilt when they pile up.
class MonomialIndex {
 public:
  explicit MonomialIndex(const std::vector<Monomial>& mons, std::size_t expected) : mons_(mons) {
    std::size_t cap = 16;
    while (cap < 2 * expected) cap <<= 1;
    slots_.assign(cap, kEmpty);
  }

  std::size_t size() const { return size_; }

  // Slot holding m, or npos.
  std::size_t find(const Monomial& m) const {
    const std::size_t mask = slots_.size() - 1;
    for (std::size_t i = m.hash() & mask;; i = (i + 1) & mask) {
      const std::uint32_t id = slots_[i];
      if (id == kEmpty) return npos;
      if (id != kDead && mons_[id] == m) return i;
    }
  }

  void insert(std::uint32_t id) {
    if (4 * (size_ + dead_ + 1) > 3 * slots_.size()) rehash(size_ + 1);
    const std::size_t mask = slots_.size() - 1;
    std::size_t i = mons_[id].hash() & mask;
    while (slots_[i] != kEmpty && slots_[i] != kDead) i = (i + 1) & mask;
    if (slots_[i] == kDead) --dead_;
    slots_[i] = id;
    ++size_;
  }

  std::uint32_t erase_slot(std::size_t slot) {
    const std::uint32_t id = slots_[slot];
    slots_[slot] = kDead;
    --size_;
    ++dead_;
    return id;
  }

  template <class F>
  void for_each(F&& f) const {
    for (std::uint32_t id : slots_)
      if (id != kEmpty && id != kDead) f(id);
  }

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

 private:
  static constexpr std::uint32_t kEmpty = 0xffffffffu;
  static constexpr std::uint32_t kDead = 0xfffffffeu;

  void rehash(std::size_t want) {
    std::vector<std::uint32_t> old = std::move(slots_);
    std::size_t cap = 16;
    while (cap < 2 * want) cap <<= 1;
    slots_.assign(cap, kEmpty);
    size_ = dead_ = 0;
    for (std::uint32_t id : old)
      if (id != kEmpty && id != kDead) insert(id);
  }

  const std::vector<Monomial>& mons_;
  std::vector<std::uint32_t> slots_;
  std::size_t size_ = 0;
  std::size_t dead_ = 0;
};

class Engine {
 public:
  explicit Engine(const PathSum& a)
      : num_vars_(a.num_vars()),
        index_(mons_, a.phase().size()),
        occ_(num_vars_),
        outs_(a.outputs()),
        ins_(a.inputs()),
        boundary_count_(num_vars_, 0),
        var_alive_(num_vars_, 1),
        ranks_(num_vars_),
        queued_(num_vars_, 0),
        touched_flag_(num_vars_, 0),
        scalar_(a.scalar()) {
    mons_.reserve(a.phase().size() * 2);
    mon_alive_.reserve(a.phase().size() * 2);
    for (const auto& m : a.phase().monomials()) insert(m);
    for (const auto& p : outs_) count_boundary(p, +1);
    for (const auto& p : ins_) count_boundary(p, +1);
    touched_.clear();
    std::fill(touched_flag_.begin(), touched_flag_.end(), 0);
    for (VarId v = 0; v < num_vars_; ++v) refresh(v);
  }

  Normalized run() {
    std::vector<RewriteStep> trace;
    trace.reserve(num_vars_);
    while (!ready_.empty()) {
      const VarId x = ready_.top();
      ready_.pop();
      if (!queued_[x]) continue;
      queued_[x] = 0;
      auto step = detect(x);
      if (!step) throw InternalError("normalizer lost track of an applicable pivot");
      trace.push_back(dense_step(*step));
      switch (step->rule) {
        case Rule::Elim:
          kill_var(x);
          scalar_ = scalar_ * Scalar::pow_sqrt2(2);
          break;
        case Rule::Z:
          return {zero_op(ins_.size(), outs_.size()), std::move(trace)};
        case Rule::HH:
          apply_hh(x, *step->target, *step->substituent);
          break;
      }
      for (VarId v : touched_) {
        touched_flag_[v] = 0;
        refresh(v);
      }
      touched_.clear();
    }
    return {build(), std::move(trace)};
  }

 private:
  void touch(VarId v) {
    if (!touched_flag_[v]) {
      touched_flag_[v] = 1;
      touched_.push_back(v);
    }
  }

  void insert(const Monomial& m) {
    const auto id = static_cast<std::uint32_t>(mons_.size());
    mons_.push_back(m);
    mon_alive_.push_back(1);
    index_.insert(id);
    for (VarId v : m.vars()) {
      occ_[v].push_back(id);
      touch(v);
    }
  }

  // Adds m to the phase over F2: cancels it if present.
  void toggle(const Monomial& m) {
    const std::size_t slot = index_.find(m);
    if (slot == MonomialIndex::npos) {
      insert(m);
      return;
    }
    mon_alive_[index_.erase_slot(slot)] = 0;
    for (VarId v : m.vars()) touch(v);
  }

  const auto& live_occ(VarId v) {
    auto& list = occ_[v];
    list.erase(std::remove_if(list.begin(), list.end(), [this](std::uint32_t id) { return !mon_alive_[id]; }), list.end());
    return list;
  }

  void count_boundary(const BoolPoly& p, int delta) {
    for (VarId v : p.vars()) {
      boundary_count_[v] = static_cast<std::uint32_t>(static_cast<int>(boundary_count_[v]) + delta);
      touch(v);
    }
  }

  // Applicable rule at x without building the step: the HH target is the
  // smaller linear partner, the other one (if any) goes into Q.
  struct Match {
    Rule rule;
    VarId lin[2];
    std::size_t nlin;
    bool constant;
  };

  std::optional<Match> match(VarId x) {
    if (!var_alive_[x] || boundary_count_[x] != 0) return std::nullopt;
    const auto& ids = live_occ(x);
    Match out{Rule::HH, {0, 0}, 0, false};
    for (std::uint32_t id : ids) {
      const Monomial& m = mons_[id];
      if (m.degree() > 2) return std::nullopt;
      if (m.degree() == 1) {
        out.constant = true;
      } else {
        if (out.nlin == 2) return std::nullopt;
        out.lin[out.nlin++] = m.vars()[0] == x ? m.vars()[1] : m.vars()[0];
      }
    }
    if (ids.empty()) out.rule = Rule::Elim;
    else if (out.nlin == 0) out.rule = Rule::Z;
    return out;
  }

  std::optional<RewriteStep> detect(VarId x) {
    auto m = match(x);
    if (!m) return std::nullopt;
    switch (m->rule) {
      case Rule::Elim: return RewriteStep::elim(x);
      case Rule::Z: return RewriteStep::z(x);
      case Rule::HH: break;
    }
    if (m->nlin == 1) return RewriteStep::hh(x, m->lin[0], BoolPoly::constant(m->constant));
    const VarId y = std::min(m->lin[0], m->lin[1]);
    const VarId z = std::max(m->lin[0], m->lin[1]);
    return RewriteStep::hh(x, y, BoolPoly::variable(z) + BoolPoly::constant(m->constant));
  }

  void refresh(VarId v) {
    if (match(v)) {
      if (!queued_[v]) {
        queued_[v] = 1;
        ready_.push(v);
      }
    } else {
      queued_[v] = 0;
    }
  }

  void kill_var(VarId x) {
    var_alive_[x] = 0;
    ranks_.add(x, -1);
    queued_[x] = 0;
  }

  void apply_hh(VarId x, VarId y, const BoolPoly& q) {
    const auto pivot_terms = live_occ(x);
    for (std::uint32_t id : pivot_terms) toggle(Monomial(mons_[id]));
    kill_var(x);

    const std::vector<std::uint32_t> target_terms(live_occ(y).begin(), live_occ(y).end());
    for (std::uint32_t id : target_terms) {
      const Monomial m = mons_[id];
      toggle(m);
      const Monomial rest = m.without(y);
      for (const auto& qm : q.monomials()) toggle(rest * qm);
    }

    for (auto* polys : {&outs_, &ins_})
      for (auto& p : *polys) {
        if (!p.contains_var(y)) continue;
        count_boundary(p, -1);
        p = p.substitute(y, q);
        count_boundary(p, +1);
      }
    touch(y);
  }

  RewriteStep dense_step(const RewriteStep& s) const {
    RewriteStep out = s;
    out.pivot = ranks_.rank(s.pivot);
    if (s.target) out.target = ranks_.rank(*s.target);
    if (s.substituent) out.substituent = s.substituent->relabel_monotone([this](VarId v) { return ranks_.rank(v); });
    return out;
  }

  PathSum build() const {
    std::vector<VarId> dense(num_vars_, 0);
    VarId next = 0;
    for (VarId v = 0; v < num_vars_; ++v)
      if (var_alive_[v]) dense[v] = next++;
    auto relabel = [&dense](VarId v) { return dense[v]; };
    std::vector<Monomial> phase;
    phase.reserve(index_.size());
    index_.for_each([&](std::uint32_t id) { phase.push_back(mons_[id].relabel_monotone(relabel)); });
    std::sort(phase.begin(), phase.end());
    std::vector<BoolPoly> outs, ins;
    for (const auto& p : outs_) outs.push_back(p.relabel_monotone(relabel));
    for (const auto& p : ins_) ins.push_back(p.relabel_monotone(relabel));
    return make(scalar_, next, BoolPoly::from_sorted(std::move(phase)), std::move(outs), std::move(ins));
  }

  std::uint32_t num_vars_;
  std::vector<Monomial> mons_;
  std::vector<char> mon_alive_;
  MonomialIndex index_;
  std::vector<boost::container::small_vector<std::uint32_t, 6>> occ_;
  std::vector<BoolPoly> outs_;
  std::vector<BoolPoly> ins_;
  std::vector<std::uint32_t> boundary_count_;
  std::vector<char> var_alive_;
  RankTree ranks_;
  // Min-heap of candidate pivots; entries whose queued_ flag is clear are stale.
  std::priority_queue<VarId, std::vector<VarId>, std::greater<>> ready_;
  std::vector<char> queued_;
  std::vector<VarId> touched_;
  std::vector<char> touched_flag_;
  Scalar scalar_;
};

}  // namespace

Normalized normalize_incremental(const PathSum& a) { return Engine(a).run(); }

}  // namespace pathsum::detail
