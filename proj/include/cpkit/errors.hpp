// Copyright 2026 The cpkit Authors
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

namespace cpkit {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual const char *kind() const noexcept { return "Error"; }
};

#define CPKIT_DEFINE_ERROR(NAME)                                     \
  class NAME : public Error {                                        \
   public:                                                           \
    using Error::Error;                                              \
    const char *kind() const noexcept override { return #NAME; }     \
  };

CPKIT_DEFINE_ERROR(DimensionMismatch)
CPKIT_DEFINE_ERROR(ShapeMismatch)
CPKIT_DEFINE_ERROR(InvalidArgument)
CPKIT_DEFINE_ERROR(IndexOutOfRange)
CPKIT_DEFINE_ERROR(MissingFactorSplit)
CPKIT_DEFINE_ERROR(NotHermitian)
CPKIT_DEFINE_ERROR(NotCompletelyPositive)
CPKIT_DEFINE_ERROR(DomainNotUnit)
CPKIT_DEFINE_ERROR(UnknownIdentifier)
CPKIT_DEFINE_ERROR(TypeError)

#undef CPKIT_DEFINE_ERROR

/// Parse failure with a 1-based source position.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t line, std::size_t column, const std::string &what)
      : Error("line " + std::to_string(line) + ", col " + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}
  const char *kind() const noexcept override { return "SyntaxError"; }
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace cpkit
