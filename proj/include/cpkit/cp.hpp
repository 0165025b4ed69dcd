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

// CP(C) over a dagger symmetric monoidal matrix category. A morphism A -> B is
// represented by a Kraus morphism f : A -> B (x) C with ancilla C; the
// morphism it denotes is cpform(f), and equality is equality of cpforms.
// No cups are used here, so everything works without compactness.

#pragma once

#include <string>
#include <utility>

#include "cpkit/mor.hpp"

namespace cpkit {

template <Scalar S>
class KrausMor {
 public:
  /// kraus must be typed (up to bracketing) in -> out (x) ancilla.
  KrausMor(Mor<S> kraus, Object in, Object out, Object ancilla)
      : kraus_(kraus.retyped(in, out * ancilla)),
        in_(std::move(in)),
        out_(std::move(out)),
        ancilla_(std::move(ancilla)) {}

  const Mor<S> &kraus() const { return kraus_; }
  const Object &in() const { return in_; }
  const Object &out() const { return out_; }
  const Object &ancilla() const { return ancilla_; }

 private:
  Mor<S> kraus_;
  Object in_;
  Object out_;
  Object ancilla_;
};

using CKraus = KrausMor<Complex>;
using RKraus = KrausMor<Bool>;

/// (f^dag (x) id_B) o swap13 o (f (x) id_B) : A (x) B -> A (x) B, where swap13
/// exchanges the outer B factors of B (x) C (x) B.
template <Scalar S>
Mor<S> cpform(const KrausMor<S> &k) {
  const Object &a = k.in(), &b = k.out(), &c = k.ancilla();
  const Mor<S> id_b = identity<S>(b);
  const Mor<S> lift = tensor(k.kraus(), id_b);
  const Mor<S> outer_swap = permute_blocks<S>({b, c, b}, {2, 1, 0});
  const Mor<S> lower = tensor(dagger(k.kraus()), id_b);
  return compose(lower, compose(outer_swap, lift)).retyped(a * b, a * b);
}

template <Scalar S>
KrausMor<S> cp_identity(const Object &a) {
  return KrausMor<S>(identity<S>(a), a, a, Object::unit());
}

/// The canonical functor C -> CP(C): f becomes a Kraus morphism with trivial
/// ancilla.
template <Scalar S>
KrausMor<S> pure(const Mor<S> &f) {
  return KrausMor<S>(f, f.dom(), f.cod(), Object::unit());
}

/// g after f. The composite ancilla is ordered C' (x) C (g's first).
template <Scalar S>
KrausMor<S> cp_compose(const KrausMor<S> &g, const KrausMor<S> &f) {
  if (!composable(g.in(), f.out())) {
    throw DimensionMismatch("cannot compose CP morphisms: " + f.out().str() + " vs " + g.in().str());
  }
  const Mor<S> g_lifted = tensor(g.kraus().retyped(f.out(), g.out() * g.ancilla()), identity<S>(f.ancilla()));
  const Mor<S> h = compose(g_lifted, f.kraus());
  return KrausMor<S>(h, f.in(), g.out(), g.ancilla() * f.ancilla());
}

/// (id_B1 (x) swap(C1, B2) (x) id_C2) o (f1 (x) f2), ancilla C1 (x) C2.
template <Scalar S>
KrausMor<S> cp_tensor(const KrausMor<S> &k1, const KrausMor<S> &k2) {
  const Mor<S> both = tensor(k1.kraus(), k2.kraus());
  const Mor<S> reorder = permute_blocks<S>({k1.out(), k1.ancilla(), k2.out(), k2.ancilla()}, {0, 2, 1, 3});
  return KrausMor<S>(compose(reorder, both), k1.in() * k2.in(), k1.out() * k2.out(), k1.ancilla() * k2.ancilla());
}

/// Max-abs distance between the cpforms (0/1 for booleans).
template <Scalar S>
double cp_distance(const KrausMor<S> &k1, const KrausMor<S> &k2) {
  if (!composable(k1.in(), k2.in()) || !composable(k1.out(), k2.out())) {
    throw ShapeMismatch("CP morphisms " + k1.in().str() + " -> " + k1.out().str() + " and " + k2.in().str() +
                        " -> " + k2.out().str() + " are not parallel");
  }
  return max_abs_diff(cpform(k1), cpform(k2));
}

template <Scalar S>
bool cp_equal(const KrausMor<S> &k1, const KrausMor<S> &k2, double tol) {
  const double d = cp_distance(k1, k2);
  if constexpr (ScalarTraits<S>::exact) {
    return d == 0.0;
  } else {
    return d <= tol;
  }
}

}  // namespace cpkit
