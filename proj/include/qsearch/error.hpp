// Copyright 2026 The qsearch Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
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

namespace qsearch {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An index, qubit or parameter lies outside its admissible range.
class RangeError : public Error {
 public:
  using Error::Error;
};

/// Two objects that must agree in qubit count or length do not.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A gate refers to the same qubit as both target and control, or repeats a
/// control.
class GateError : public Error {
 public:
  using Error::Error;
};

/// A database or marked set that must be nonempty is empty.
class EmptyError : public Error {
 public:
  using Error::Error;
};

/// Malformed input data (CSV dataset, circuit text). Carries the 1-based line
/// number when known, 0 otherwise.
class DataError : public Error {
 public:
  DataError(const std::string& message, std::size_t line = 0)
      : Error(line == 0 ? message
                        : "line " + std::to_string(line) + ": " + message),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Circuit text that does not follow the `.qc` grammar.
class ParseError : public DataError {
 public:
  using DataError::DataError;
};

}  // namespace qsearch
