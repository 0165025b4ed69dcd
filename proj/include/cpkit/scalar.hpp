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

#include <cmath>
#include <complex>
#include <concepts>
#include <string_view>

namespace cpkit {

using Complex = std::complex<double>;

/// Element of the boolean semiring ({0,1}, OR, AND). Morphisms over it are
/// relations between finite sets.
struct Bool {
  bool value = false;

  constexpr Bool() = default;
  constexpr explicit Bool(bool v) : value(v) {}

  friend constexpr Bool operator+(Bool a, Bool b) { return Bool(a.value || b.value); }
  friend constexpr Bool operator*(Bool a, Bool b) { return Bool(a.value && b.value); }
  constexpr Bool &operator+=(Bool b) {
    value = value || b.value;
    return *this;
  }
  friend constexpr bool operator==(Bool a, Bool b) = default;
};

template <class S>
struct ScalarTraits;

template <>
struct ScalarTraits<Complex> {
  static constexpr std::string_view name = "complex";
  static constexpr bool exact = false;
  static Complex zero() { return {0.0, 0.0}; }
  static Complex one() { return {1.0, 0.0}; }
  static Complex conj(Complex z) { return std::conj(z); }
  static double distance(Complex a, Complex b) { return std::abs(a - b); }
};

template <>
struct ScalarTraits<Bool> {
  static constexpr std::string_view name = "bool";
  static constexpr bool exact = true;
  static constexpr Bool zero() { return Bool(false); }
  static constexpr Bool one() { return Bool(true); }
  static constexpr Bool conj(Bool b) { return b; }
  static constexpr double distance(Bool a, Bool b) { return a == b ? 0.0 : 1.0; }
};

/// A commutative semiring with an involutive conjugation.
template <class S>
concept Scalar = requires(S a, S b) {
  { ScalarTraits<S>::zero() } -> std::convertible_to<S>;
  { ScalarTraits<S>::one() } -> std::convertible_to<S>;
  { ScalarTraits<S>::conj(a) } -> std::convertible_to<S>;
  { ScalarTraits<S>::distance(a, b) } -> std::convertible_to<double>;
  { a + b } -> std::convertible_to<S>;
  { a * b } -> std::convertible_to<S>;
};

}  // namespace cpkit
