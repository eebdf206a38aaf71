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
#include <charconv>
#include <set>

#include "pathsum/circuit.hpp"
#include "pathsum/errors.hpp"
#include "random.hpp"

namespace pathsum {

namespace {

std::vector<Qubit> identity_perm(std::size_t h) {
  std::vector<Qubit> p(h);
  for (std::size_t i = 0; i < h; ++i) p[i] = static_cast<Qubit>(i);
  return p;
}

Qubit parse_qubit(std::string_view tok) {
  while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
  while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
  Qubit v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size())
    throw InvalidArgument("expected a nonnegative integer, got '" + std::string(tok) + "'");
  return v;
}

std::vector<Qubit> parse_comma_list(std::string_view text) {
  std::vector<Qubit> out;
  std::size_t pos = 0;
  while (true) {
    std::size_t comma = text.find(',', pos);
    out.push_back(parse_qubit(text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos)));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

}  // namespace

void HiddenShiftSpec::validate(std::size_t max_controls) const {
  if (n == 0 || n % 2 != 0) throw InvalidArgument("hidden shift instances need an even, positive qubit count");
  const std::size_t h = n / 2;
  if (shift.size() != n)
    throw InvalidArgument("shift has " + std::to_string(shift.size()) + " bits, expected " + std::to_string(n));
  std::set<std::vector<Qubit>> seen;
  for (const auto& mono : g) {
    if (mono.empty() || mono.size() > max_controls + 1)
      throw InvalidArgument("monomials of g need between 1 and " + std::to_string(max_controls + 1) + " variables");
    std::vector<Qubit> sorted = mono;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw InvalidArgument("monomial of g repeats an index");
    if (sorted.back() >= h)
      throw InvalidArgument("monomial index " + std::to_string(sorted.back()) + " out of range 0.." +
                            std::to_string(h - 1));
    if (!seen.insert(sorted).second) throw InvalidArgument("g lists a monomial twice");
  }
  if (!pi.empty()) {
    if (pi.size() != h) throw InvalidArgument("pi must permute 0.." + std::to_string(h - 1));
    std::vector<Qubit> sorted = pi;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != identity_perm(h)) throw InvalidArgument("pi is not a permutation of 0.." + std::to_string(h - 1));
  }
}

Circuit hidden_shift_circuit(const HiddenShiftSpec& spec, std::size_t max_controls) {
  spec.validate(max_controls);
  const std::size_t n = spec.n;
  const std::size_t h = n / 2;
  const std::vector<Qubit> pi = spec.pi.empty() ? identity_perm(h) : spec.pi;
  std::vector<Qubit> pi_inv(h);
  for (std::size_t i = 0; i < h; ++i) pi_inv[pi[i]] = static_cast<Qubit>(i);

  Circuit c;
  c.num_qubits = n;
  auto hadamards = [&] {
    for (std::size_t q = 0; q < n; ++q) c.gates.push_back(Gate::h(static_cast<Qubit>(q)));
  };
  auto shift_layer = [&] {
    for (std::size_t q = 0; q < n; ++q)
      if (spec.shift[q]) c.gates.push_back(Gate::x(static_cast<Qubit>(q)));
  };
  auto coupling = [&] {
    for (std::size_t i = 0; i < h; ++i) c.gates.push_back(Gate::z({static_cast<Qubit>(i), static_cast<Qubit>(h + pi[i])}));
  };

  hadamards();
  shift_layer();
  // O_f with f(x, y) = <x, pi(y)> + g(y), conjugated by X^s.
  coupling();
  for (const auto& mono : spec.g) {
    std::vector<Qubit> qs;
    for (Qubit a : mono) qs.push_back(static_cast<Qubit>(h + a));
    c.gates.push_back(Gate::z(std::move(qs)));
  }
  shift_layer();
  hadamards();
  // O of the dual: <pi^-1(x), y> + g(pi^-1(x)). The inner product term is the
  // same coupling layer; g reads the first half through pi^-1.
  coupling();
  for (const auto& mono : spec.g) {
    std::vector<Qubit> qs;
    for (Qubit a : mono) qs.push_back(pi_inv[a]);
    c.gates.push_back(Gate::z(std::move(qs)));
  }
  hadamards();
  return c;
}

std::vector<std::vector<Qubit>> parse_monomial_list(std::string_view text) {
  std::vector<std::vector<Qubit>> out;
  if (text.find_first_not_of(' ') == std::string_view::npos) return out;
  std::size_t pos = 0;
  while (true) {
    std::size_t semi = text.find(';', pos);
    out.push_back(parse_comma_list(text.substr(pos, semi == std::string_view::npos ? std::string_view::npos : semi - pos)));
    if (semi == std::string_view::npos) break;
    pos = semi + 1;
  }
  return out;
}

std::vector<Qubit> parse_permutation(std::string_view text) {
  if (text.find_first_not_of(' ') == std::string_view::npos) return {};
  return parse_comma_list(text);
}

HiddenShiftSpec random_hidden_shift_spec(std::size_t n, std::size_t cubic, bool permute, std::uint64_t seed) {
  if (n == 0 || n % 2 != 0) throw InvalidArgument("hidden shift instances need an even, positive qubit count");
  const std::size_t h = n / 2;
  const std::size_t max_cubic = h < 3 ? 0 : h * (h - 1) * (h - 2) / 6;
  if (cubic > max_cubic)
    throw InvalidArgument("only " + std::to_string(max_cubic) + " distinct cubic monomials exist on " +
                          std::to_string(h) + " indices");
  std::mt19937_64 rng(seed);
  HiddenShiftSpec spec;
  spec.n = n;
  std::set<std::vector<Qubit>> chosen;
  while (chosen.size() < cubic) {
    auto qs = detail::distinct_below(rng, static_cast<std::uint32_t>(h), 3);
    std::sort(qs.begin(), qs.end());
    chosen.insert(std::vector<Qubit>(qs.begin(), qs.end()));
  }
  const std::size_t extra = detail::uniform_below(rng, 3);
  for (std::size_t i = 0; i < extra; ++i) {
    std::size_t deg = 1 + detail::uniform_below(rng, std::min<std::size_t>(2, h));
    auto qs = detail::distinct_below(rng, static_cast<std::uint32_t>(h), deg);
    std::sort(qs.begin(), qs.end());
    chosen.insert(std::vector<Qubit>(qs.begin(), qs.end()));
  }
  spec.g.assign(chosen.begin(), chosen.end());
  detail::shuffle(spec.g, rng);
  spec.shift.resize(n);
  for (auto& b : spec.shift) b = static_cast<std::uint8_t>(rng() & 1u);
  if (permute) {
    spec.pi = identity_perm(h);
    detail::shuffle(spec.pi, rng);
  }
  return spec;
}

}  // namespace pathsum
