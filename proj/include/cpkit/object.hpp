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
#include <initializer_list>
#include <string>
#include <vector>

#include "cpkit/errors.hpp"

namespace cpkit {

/// An object of a strict monoidal skeleton: an ordered word of factor
/// dimensions. The empty word is the tensor unit.
///
/// Basis indices of a word (i1, ..., ik) are big-endian: the leftmost factor
/// is the most significant digit.
class Object {
 public:
  Object() = default;
  Object(std::initializer_list<std::size_t> factors) : Object(std::vector<std::size_t>(factors)) {}
  explicit Object(std::vector<std::size_t> factors) : factors_(std::move(factors)) {
    for (std::size_t d : factors_) {
      if (d == 0) {
        throw InvalidArgument("object factors must be positive");
      }
    }
  }

  static Object unit() { return {}; }

  const std::vector<std::size_t> &factors() const { return factors_; }
  bool is_unit() const { return factors_.empty(); }

  std::size_t total() const {
    std::size_t n = 1;
    for (std::size_t d : factors_) {
      n *= d;
    }
    return n;
  }

  /// Strict tensor: concatenation of factor words.
  friend Object operator*(const Object &a, const Object &b) {
    std::vector<std::size_t> f = a.factors_;
    f.insert(f.end(), b.factors_.begin(), b.factors_.end());
    return Object(std::move(f));
  }

  friend bool operator==(const Object &, const Object &) = default;

  /// "2*3", or "I" for the unit.
  std::string str() const {
    if (factors_.empty()) {
      return "I";
    }
    std::string s;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      if (i) {
        s += '*';
      }
      s += std::to_string(factors_[i]);
    }
    return s;
  }

 private:
  std::vector<std::size_t> factors_;
};

/// Objects compare for composition by total dimension only.
inline bool composable(const Object &a, const Object &b) { return a.total() == b.total(); }

inline Object tensor_all(const std::vector<Object> &objects) {
  Object r;
  for (const Object &o : objects) {
    r = r * o;
  }
  return r;
}

}  // namespace cpkit
