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

#include "pathsum/amplitude.hpp"

#include <cmath>
#include <cstdio>

#include "pathsum/errors.hpp"

namespace pathsum {

Amplitude::Amplitude(BigInt num, std::int64_t half_exp) : num_(std::move(num)), half_exp_(half_exp) {
  canonicalize();
}

void Amplitude::canonicalize() {
  if (num_ == 0) {
    half_exp_ = 0;
    return;
  }
  unsigned twos = boost::multiprecision::lsb(boost::multiprecision::abs(num_));
  if (twos > 0) {
    num_ >>= twos;
    half_exp_ += 2 * static_cast<std::int64_t>(twos);
  }
}

Amplitude operator+(const Amplitude& a, const Amplitude& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  std::int64_t diff = a.half_exp_ - b.half_exp_;
  if (diff % 2 != 0)
    throw InvalidArgument("cannot add " + a.to_string() + " and " + b.to_string() +
                          " exactly: exponent parities differ");
  if (diff >= 0) return {(a.num_ << static_cast<unsigned>(diff / 2)) + b.num_, b.half_exp_};
  return {a.num_ + (b.num_ << static_cast<unsigned>(-diff / 2)), a.half_exp_};
}

Amplitude operator*(const Amplitude& a, const Amplitude& b) {
  if (a.is_zero() || b.is_zero()) return {};
  return {a.num_ * b.num_, a.half_exp_ + b.half_exp_};
}

bool Amplitude::le_one() const {
  if (num_ <= 0) return true;
  // N * 2^(e/2) <= 1  <=>  N^2 * 2^e <= 1.
  BigInt sq = num_ * num_;
  if (half_exp_ >= 0) return (sq << static_cast<unsigned>(half_exp_)) <= 1;
  return sq <= (BigInt(1) << static_cast<unsigned>(-half_exp_));
}

std::string Amplitude::to_string() const {
  if (is_zero()) return "0";
  return num_.str() + " * 2^(" + std::to_string(half_exp_) + "/2)";
}

std::string Amplitude::to_rational_string() const {
  if (is_zero()) return "0";
  if (half_exp_ % 2 != 0) return to_string();
  if (half_exp_ >= 0) return BigInt(num_ << static_cast<unsigned>(half_exp_ / 2)).str();
  return num_.str() + "/" + BigInt(BigInt(1) << static_cast<unsigned>(-half_exp_ / 2)).str();
}

double Amplitude::to_double() const {
  if (is_zero()) return 0.0;
  return num_.convert_to<double>() * std::pow(2.0, static_cast<double>(half_exp_) / 2.0);
}

std::string Amplitude::to_decimal_string() const {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", to_double());
  return buf;
}

}  // namespace pathsum
