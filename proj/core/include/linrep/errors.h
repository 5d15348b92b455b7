// Copyright 2026 The linrep Authors
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

#ifndef LINREP_ERRORS_H_
#define LINREP_ERRORS_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace linrep {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input: bad field parameters, size or field mismatches, files that
// do not match their schema.
class InputError : public Error {
 public:
  using Error::Error;
};

// Operands live in different ambient spaces or fields.
class DimensionMismatch : public InputError {
 public:
  using InputError::InputError;
};

class SingularMatrixError : public Error {
 public:
  using Error::Error;
};

// A caller-set enumeration or search budget was exhausted.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

// Syntax error in one of the textual grammars. position() is a 0-based byte
// offset into the input.
class ParseError : public InputError {
 public:
  ParseError(const std::string& message, std::size_t position)
      : InputError(message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

}  // namespace linrep

#endif  // LINREP_ERRORS_H_
