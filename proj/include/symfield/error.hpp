// Copyright 2026 The symfield Authors
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

#ifndef SYMFIELD_ERROR_HPP_
#define SYMFIELD_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace symfield {

// Root of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An argument is outside the operation's domain, or a hypothesis the result
// depends on does not hold. Nothing is claimed for such inputs.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Operands live over different coefficient fields.
class FieldMismatch : public Error {
 public:
  using Error::Error;
};

// An exponent or degree left the range of a machine word.
class ExponentOverflow : public Error {
 public:
  using Error::Error;
};

// A division that was required to be exact left a nonzero remainder.
class InexactDivision : public Error {
 public:
  using Error::Error;
};

// The ambient finite field does not contain the elements an operation needs.
class FieldTooSmall : public Error {
 public:
  FieldTooSmall(const std::string& what, unsigned required_degree)
      : Error(what), required_degree_(required_degree) {}

  // Smallest extension degree over the prime field that would suffice.
  unsigned required_degree() const noexcept { return required_degree_; }

 private:
  unsigned required_degree_;
};

// An exhaustive enumeration would exceed the configured field-size ceiling.
class CeilingExceeded : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

// Two independent constructions of the same object disagree. Indicates a bug
// or a falsified identity; never expected to fire.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace symfield

#endif  // SYMFIELD_ERROR_HPP_
