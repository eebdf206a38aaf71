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

#include "pathsum/circuit.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "pathsum/errors.hpp"
#include "random.hpp"

namespace pathsum {

namespace {

constexpr std::size_t kMaxParsedQubits = std::size_t{1} << 20;

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r' || line[i] == '\v' ||
                               line[i] == '\f'))
      ++i;
    if (i >= line.size()) break;
    std::size_t start = i;
    while (i < line.size() && !(line[i] == ' ' || line[i] == '\t' || line[i] == '\r' || line[i] == '\v' ||
                                line[i] == '\f'))
      ++i;
    out.push_back({line.substr(start, i - start), start + 1});
  }
  return out;
}

std::size_t parse_index(const Token& tok, std::size_t line) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.text.data(), tok.text.data() + tok.text.size(), value);
  if (ec != std::errc() || ptr != tok.text.data() + tok.text.size())
    throw ParseError(line, tok.column, "expected a nonnegative integer, got '" + std::string(tok.text) + "'");
  return value;
}

const char* mnemonic(GateKind k) {
  switch (k) {
    case GateKind::H: return "h";
    case GateKind::X: return "x";
    case GateKind::Z: return "z";
    case GateKind::Swap: return "swap";
  }
  return "?";
}

void check_gate(const Gate& g, std::size_t n, std::size_t max_controls) {
  const std::size_t arity = g.qubits.size();
  switch (g.kind) {
    case GateKind::H:
    case GateKind::X:
      if (arity != 1) throw InvalidArgument(std::string(mnemonic(g.kind)) + " takes exactly one qubit");
      break;
    case GateKind::Swap:
      if (arity != 2) throw InvalidArgument("swap takes exactly two qubits");
      break;
    case GateKind::Z:
      if (arity == 0) throw InvalidArgument("z takes at least one qubit");
      if (arity - 1 > max_controls)
        throw InvalidArgument("z on " + std::to_string(arity) + " qubits exceeds the limit of " +
                              std::to_string(max_controls) + " controls");
      break;
  }
  for (std::size_t i = 0; i < arity; ++i) {
    if (g.qubits[i] >= n)
      throw InvalidArgument("qubit " + std::to_string(g.qubits[i]) + " out of range for " + std::to_string(n) +
                            " qubits");
    for (std::size_t j = 0; j < i; ++j)
      if (g.qubits[j] == g.qubits[i]) throw InvalidArgument("qubit " + std::to_string(g.qubits[i]) + " repeated in gate");
  }
}

}  // namespace

void Circuit::validate(std::size_t max_controls) const {
  for (const auto& g : gates) check_gate(g, num_qubits, max_controls);
}

std::size_t Circuit::max_controls() const {
  std::size_t m = 0;
  for (const auto& g : gates) m = std::max(m, g.controls());
  return m;
}

Circuit parse_circuit(std::string_view text, std::size_t max_controls) {
  Circuit c;
  bool have_header = false;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto toks = tokenize(line);
    if (toks.empty()) {
      if (end == text.size()) break;
      continue;
    }
    const Token& head = toks[0];
    if (!have_header) {
      if (head.text != "qubits") throw ParseError(line_no, head.column, "expected 'qubits N' header");
      if (toks.size() != 2) throw ParseError(line_no, head.column, "'qubits' takes exactly one count");
      c.num_qubits = parse_index(toks[1], line_no);
      if (c.num_qubits > kMaxParsedQubits) throw ParseError(line_no, toks[1].column, "qubit count too large");
      have_header = true;
      continue;
    }
    Gate g;
    std::size_t fixed_arity = 0;
    if (head.text == "h")
      g.kind = GateKind::H;
    else if (head.text == "x")
      g.kind = GateKind::X;
    else if (head.text == "z")
      g.kind = GateKind::Z;
    else if (head.text == "swap")
      g.kind = GateKind::Swap;
    else if (head.text == "cz" || head.text == "ccz") {
      g.kind = GateKind::Z;
      fixed_arity = head.text.size();
    } else if (head.text == "qubits")
      throw ParseError(line_no, head.column, "duplicate 'qubits' header");
    else
      throw ParseError(line_no, head.column, "unknown gate '" + std::string(head.text) + "'");
    for (std::size_t i = 1; i < toks.size(); ++i) {
      std::size_t q = parse_index(toks[i], line_no);
      if (q >= c.num_qubits)
        throw ParseError(line_no, toks[i].column,
                         "qubit " + std::string(toks[i].text) + " out of range for " + std::to_string(c.num_qubits) +
                             " qubits");
      for (std::size_t j = 1; j < i; ++j)
        if (g.qubits[j - 1] == q)
          throw ParseError(line_no, toks[i].column, "qubit " + std::to_string(q) + " repeated in gate");
      g.qubits.push_back(static_cast<Qubit>(q));
    }
    if (fixed_arity != 0 && g.qubits.size() != fixed_arity)
      throw ParseError(line_no, head.column,
                       std::string(head.text) + " takes exactly " + std::to_string(fixed_arity) + " qubits");
    try {
      check_gate(g, c.num_qubits, max_controls);
    } catch (const InvalidArgument& e) {
      throw ParseError(line_no, head.column, e.what());
    }
    c.gates.push_back(std::move(g));
    if (end == text.size()) break;
  }
  if (!have_header) throw ParseError(line_no == 0 ? 1 : line_no, 1, "missing 'qubits N' header");
  return c;
}

std::string serialize(const Circuit& c) {
  std::ostringstream os;
  os << "qubits " << c.num_qubits << '\n';
  for (const auto& g : c.gates) {
    os << mnemonic(g.kind);
    for (Qubit q : g.qubits) os << ' ' << q;
    os << '\n';
  }
  return os.str();
}

Volume volume(const Circuit& c) { return {c.gates.size(), c.num_qubits, c.gates.size() * c.num_qubits}; }

Circuit random_circuit(std::size_t n, std::size_t depth, std::size_t max_controls, std::uint64_t seed) {
  if (n == 0) throw InvalidArgument("random_circuit needs at least one qubit");
  if (max_controls + 1 > n) throw InvalidArgument("random_circuit: max controls + 1 exceeds the qubit count");
  std::mt19937_64 rng(seed);
  // Kinds: 0 = H, 1 = X, 2 = SWAP, 3 + j = C^(j)Z.
  std::vector<std::size_t> kinds{0, 1};
  if (n >= 2) kinds.push_back(2);
  for (std::size_t j = 0; j <= max_controls; ++j) kinds.push_back(3 + j);
  Circuit c;
  c.num_qubits = n;
  for (std::size_t i = 0; i < depth; ++i) {
    std::size_t kind = kinds[detail::uniform_below(rng, kinds.size())];
    const auto nq = static_cast<std::uint32_t>(n);
    switch (kind) {
      case 0: c.gates.push_back(Gate::h(static_cast<Qubit>(detail::uniform_below(rng, n)))); break;
      case 1: c.gates.push_back(Gate::x(static_cast<Qubit>(detail::uniform_below(rng, n)))); break;
      case 2: {
        auto qs = detail::distinct_below(rng, nq, 2);
        c.gates.push_back(Gate::swap(qs[0], qs[1]));
        break;
      }
      default: {
        auto qs = detail::distinct_below(rng, nq, kind - 2);
        c.gates.push_back(Gate::z(std::vector<Qubit>(qs.begin(), qs.end())));
        break;
      }
    }
  }
  return c;
}

}  // namespace pathsum
