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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pathsum {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on the arguments of an operation does not hold.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Malformed circuit text. Line and column are 1-based.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        line_(line),
        column_(column),
        message_(message) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::string& message() const { return message_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string message_;
};

/// The normal form kept more summation variables than dense evaluation allows.
class EvalGuardError : public Error {
 public:
  EvalGuardError(std::size_t residual_vars, std::size_t limit)
      : Error("inefficient instance: " + std::to_string(residual_vars) +
              " summation variables remain, evaluation limit is " + std::to_string(limit)),
        residual_vars_(residual_vars),
        limit_(limit) {}

  std::size_t residual_vars() const { return residual_vars_; }
  std::size_t limit() const { return limit_; }

 private:
  std::size_t residual_vars_;
  std::size_t limit_;
};

/// A rewrite step whose precondition does not hold on the given path sum.
class StaleStepError : public Error {
 public:
  using Error::Error;
};

/// A qubit of a circuit measured on |0...0> is not deterministic.
class NonDeterministicError : public Error {
 public:
  NonDeterministicError(std::size_t qubit, const std::string& probability)
      : Error("qubit " + std::to_string(qubit) + " measures 1 with probability " + probability +
              ", expected exactly 0 or 1"),
        qubit_(qubit),
        probability_(probability) {}

  std::size_t qubit() const { return qubit_; }
  const std::string& probability() const { return probability_; }

 private:
  std::size_t qubit_;
  std::string probability_;
};

/// An internal consistency check failed. Indicates a bug, not bad input.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace pathsum
