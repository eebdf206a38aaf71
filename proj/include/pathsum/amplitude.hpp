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

#include <boost/multiprecision/cpp_int.hpp>

namespace pathsum {

using BigInt = boost::multiprecision::cpp_int;

/// Exact real number N * 2^(e/2) with N an arbitrary-precision integer.
///
/// Canonical form keeps N odd, or N = 0 with e = 0, so equality of values is
/// equality of representations. Sums are defined only when both exponents
/// share a parity (or one side is zero); integers and odd multiples of sqrt(2)
/// never mix in the Toffoli-Hadamard fragment.
class Amplitude {
 public:
  Amplitude() = default;
  Amplitude(BigInt num, std::int64_t half_exp);
  explicit Amplitude(std::int64_t num) : Amplitude(BigInt(num), 0) {}

  static Amplitude zero() { return {}; }
  static Amplitude one() { return Amplitude(1); }

  const BigInt& num() const { return num_; }
  std::int64_t half_exp() const { return half_exp_; }
  bool is_zero() const { return num_ == 0; }
  int sign() const { return num_.sign(); }

  Amplitude operator-() const { return {-num_, half_exp_}; }
  /// Throws InvalidArgument when exponent parities differ and neither is zero.
  friend Amplitude operator+(const Amplitude& a, const Amplitude& b);
  friend Amplitude operator-(const Amplitude& a, const Amplitude& b) { return a + (-b); }
  friend Amplitude operator*(const Amplitude& a, const Amplitude& b);
  Amplitude& operator+=(const Amplitude& b) { return *this = *this + b; }
  Amplitude& operator*=(const Amplitude& b) { return *this = *this * b; }

  /// Real values: conjugation is the identity.
  Amplitude conj() const { return *this; }

  bool operator==(const Amplitude&) const = default;

  /// Exact comparison against 0 and 1, used for probabilities.
  bool is_one() const { return num_ == 1 && half_exp_ == 0; }
  bool le_one() const;

  /// "0" or "N * 2^(e/2)".
  std::string to_string() const;
  /// "N/D" or "N" when the value is rational; otherwise the exact form.
  std::string to_rational_string() const;
  /// 15 significant digits.
  std::string to_decimal_string() const;
  double to_double() const;

 private:
  void canonicalize();

  BigInt num_ = 0;
  std::int64_t half_exp_ = 0;
};

}  // namespace pathsum
