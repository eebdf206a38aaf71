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

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "pathsum/errors.hpp"

namespace pathsum {

/// A computational basis label, one entry (0 or 1) per qubit. Qubit 0 is the
/// leftmost character in text and the most significant bit of an index.
using Bits = std::vector<std::uint8_t>;

inline Bits parse_bits(std::string_view text) {
  Bits out;
  out.reserve(text.size());
  for (char c : text) {
    if (c != '0' && c != '1') throw InvalidArgument("bitstring may contain only 0 and 1: '" + std::string(text) + "'");
    out.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  return out;
}

inline std::string bits_to_string(const Bits& bits) {
  std::string out;
  out.reserve(bits.size());
  for (auto b : bits) out.push_back(b ? '1' : '0');
  return out;
}

inline std::uint64_t bits_to_index(const Bits& bits) {
  std::uint64_t idx = 0;
  for (auto b : bits) idx = (idx << 1) | (b & 1u);
  return idx;
}

inline Bits index_to_bits(std::uint64_t idx, std::size_t width) {
  Bits out(width);
  for (std::size_t i = 0; i < width; ++i) out[width - 1 - i] = static_cast<std::uint8_t>((idx >> i) & 1u);
  return out;
}

}  // namespace pathsum
