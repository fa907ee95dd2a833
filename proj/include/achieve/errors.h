// Copyright 2026 The Achievement Games Authors
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

#ifndef ACHIEVE_ERRORS_H_
#define ACHIEVE_ERRORS_H_

#include <cstdint>
#include <stdexcept>
#include <string>

namespace achieve {

// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A precondition on an argument was violated (bad index, shape, size).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// Malformed textual input. Line and column are 1-based; 0 means unknown.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line = 0, int column = 0)
      : Error(Format(what, line, column)), line_(line), column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  static std::string Format(const std::string& what, int line, int column) {
    if (line <= 0) return what;
    return "line " + std::to_string(line) + ", column " +
           std::to_string(column) + ": " + what;
  }

  int line_;
  int column_;
};

// A computation would exceed a configured work guardrail.
class CapExceeded : public Error {
 public:
  CapExceeded(const std::string& what, std::uint64_t estimate,
              std::uint64_t cap)
      : Error(what + " (estimated work " + std::to_string(estimate) +
              ", cap " + std::to_string(cap) + ")"),
        estimate_(estimate),
        cap_(cap) {}

  std::uint64_t estimate() const { return estimate_; }
  std::uint64_t cap() const { return cap_; }

 private:
  std::uint64_t estimate_;
  std::uint64_t cap_;
};

}  // namespace achieve

#endif  // ACHIEVE_ERRORS_H_
