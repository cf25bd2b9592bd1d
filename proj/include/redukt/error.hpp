// Copyright 2026 The Redukt Authors.
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

#ifndef REDUKT_ERROR_HPP_
#define REDUKT_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace redukt {

// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual const char* kind() const noexcept { return "error"; }
};

// Malformed textual or JSON input.
class ParseError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "parse"; }
};

// A pointer sequence in which some symbol does not occur exactly twice.
class LegalityError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "legality"; }
};

// A graph that violates the structural conditions of its type.
class ValidationError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "validation"; }
};

// An operation was invoked outside its domain (rule not applicable,
// symbol not in the domain, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "precondition"; }
};

// The input graph is not isomorphic to any reduction graph.
class NotInRangeError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "not-in-range"; }
};

// An enumeration grew past its configured size limit.
class BudgetExceededError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "budget-exceeded"; }
};

}  // namespace redukt

#endif  // REDUKT_ERROR_HPP_
