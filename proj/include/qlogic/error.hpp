// Copyright 2026 The qlogic Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//     http://www.apache.org/licenses/LICENSE-2.0
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qlogic {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Zero, non-finite or otherwise unusable state or basis input.
class InvalidStateError : public Error {
  public:
    using Error::Error;
};

/// Numerical invariant broken after an operation (normalization drift,
/// non-unitary gate). Indicates a bug or pathological input, not bad usage.
class NumericError : public Error {
  public:
    using Error::Error;
};

/// Use of a qubit after it was consumed, or an attempt to duplicate one.
class ConsumedQubitError : public Error {
  public:
    using Error::Error;
};

/// Formula or judgement text that does not match the grammar.
class SyntaxError : public Error {
  public:
    SyntaxError(const std::string &message, std::size_t position)
        : Error(message + " at position " + std::to_string(position)),
          position_(position) {}

    [[nodiscard]] std::size_t position() const noexcept { return position_; }

  private:
    std::size_t position_;
};

/// `&` and `(+)` mixed at the same level without parentheses.
class AmbiguityError : public SyntaxError {
  public:
    using SyntaxError::SyntaxError;
};

/// A reflection rule received a judgement of the wrong polarity.
class PolarityError : public Error {
  public:
    using Error::Error;
};

/// A valuation lacks an atom that the formula mentions.
class ValuationError : public Error {
  public:
    using Error::Error;
};

/// An axiom that the observer context cannot hold.
class ContextError : public Error {
  public:
    using Error::Error;
};

/// Scenario text or validation failure; `line()` is 1-based, 0 when unknown.
class ScenarioError : public Error {
  public:
    ScenarioError(const std::string &message, std::size_t line)
        : Error(line == 0 ? message
                          : "line " + std::to_string(line) + ": " + message),
          line_(line) {}

    [[nodiscard]] std::size_t line() const noexcept { return line_; }

  private:
    std::size_t line_;
};

} // namespace qlogic
