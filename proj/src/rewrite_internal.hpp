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

#include <vector>

#include "pathsum/rewrite.hpp"

namespace pathsum::detail {

// Steps available at pivot x, given that x occurs in no output or input and
// that the phase cofactors as x*L + R. Monomials of L may be given in any
// order.
template <typename MonomialRange>
void steps_from_cofactor(VarId x, const MonomialRange& cofactor_terms, std::vector<RewriteStep>& out) {
  std::size_t count = 0;
  bool constant = false;
  VarId lin[2] = {0, 0};
  std::size_t nlin = 0;
  for (const Monomial& m : cofactor_terms) {
    ++count;
    if (m.degree() > 1) return;
    if (m.degree() == 0) {
      constant = true;
      continue;
    }
    if (nlin == 2) return;
    lin[nlin++] = m.vars()[0];
  }
  if (count == 0) {
    out.push_back(RewriteStep::elim(x));
    return;
  }
  if (nlin == 0) {
    out.push_back(RewriteStep::z(x));
    return;
  }
  if (nlin == 1) {
    out.push_back(RewriteStep::hh(x, lin[0], BoolPoly::constant(constant)));
    return;
  }
  if (lin[0] > lin[1]) std::swap(lin[0], lin[1]);
  out.push_back(RewriteStep::hh(x, lin[0], BoolPoly::variable(lin[1]) + BoolPoly::constant(constant)));
  out.push_back(RewriteStep::hh(x, lin[1], BoolPoly::variable(lin[0]) + BoolPoly::constant(constant)));
}

}  // namespace pathsum::detail
