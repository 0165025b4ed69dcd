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

// The two concrete instances: FdHilb (Mor<Complex>) and Rel (Mor<Bool>).
// Both are dagger compact; every object is self-dual through its standard
// basis, so A* is represented by A itself.

#pragma once

#include <utility>
#include <vector>

#include "cpkit/mor.hpp"

namespace cpkit {

template <class S>
inline constexpr bool is_compact_v = false;
template <>
inline constexpr bool is_compact_v<Complex> = true;
template <>
inline constexpr bool is_compact_v<Bool> = true;

/// Scalar types whose matrix category carries cups and caps.
template <class S>
concept CompactScalar = Scalar<S> && is_compact_v<S>;

/// eta_a : I -> a*a, the unnormalized vector sum_i e_i (x) e_i.
template <CompactScalar S>
Mor<S> cup(const Object &a) {
  const std::size_t n = a.total();
  std::vector<S> e(n * n, ScalarTraits<S>::zero());
  for (std::size_t i = 0; i < n; ++i) {
    e[i * n + i] = ScalarTraits<S>::one();
  }
  return Mor<S>(Object::unit(), a * a, std::move(e));
}

/// epsilon_a = dagger(eta_a) : a*a -> I.
template <CompactScalar S>
Mor<S> cap(const Object &a) {
  return dagger(cup<S>(a));
}

/// f_* for f : A -> c*b, typed A -> b*c: swap(c, b) o conj(f).
template <Scalar S>
Mor<S> conj_star(const Mor<S> &f, const Object &c, const Object &b) {
  if ((c * b).total() != f.cod().total()) {
    throw DimensionMismatch("codomain " + f.cod().str() + " does not split as " + c.str() + " (x) " + b.str());
  }
  return compose(swap<S>(c, b), conj(f).retyped(f.dom(), c * b));
}

/// f_* using the codomain's own factor word, which must have exactly two
/// factors (c, b).
template <Scalar S>
Mor<S> conj_star(const Mor<S> &f) {
  const auto &fs = f.cod().factors();
  if (fs.size() != 2) {
    throw MissingFactorSplit("star needs a two-factor codomain, got " + f.cod().str());
  }
  return conj_star(f, Object{fs[0]}, Object{fs[1]});
}

/// Relation dom_size -> cod_size holding exactly the listed (cod, dom) pairs.
inline RMor rel_mor(std::size_t dom_size, std::size_t cod_size,
                    const std::vector<std::pair<std::size_t, std::size_t>> &pairs) {
  std::vector<Bool> e(dom_size * cod_size);
  for (auto [r, c] : pairs) {
    if (r >= cod_size || c >= dom_size) {
      throw IndexOutOfRange("pair (" + std::to_string(r) + ", " + std::to_string(c) + ") outside " +
                            std::to_string(cod_size) + "x" + std::to_string(dom_size));
    }
    e[r * dom_size + c] = Bool(true);
  }
  return RMor(Object{dom_size}, Object{cod_size}, std::move(e));
}

}  // namespace cpkit
