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

// CPM(C) for the compact instances. The realized matrix of a Kraus morphism
// f : A -> B (x) C is the doubled map A (x) A -> B (x) B obtained by contracting
// the two ancilla legs of f_* (x) f with a cap. Doubled wires are indexed
// (left copy, right copy) with the conjugated copy on the left.

#pragma once

#include <utility>

#include "cpkit/compact.hpp"
#include "cpkit/cp.hpp"

namespace cpkit {

/// (id_B (x) eps_C (x) id_B) o (f_* (x) f) : A (x) A -> B (x) B.
template <CompactScalar S>
Mor<S> cpmform(const KrausMor<S> &k) {
  const Object &a = k.in(), &b = k.out(), &c = k.ancilla();
  // Stored convention is B (x) C; the star operation wants the ancilla first.
  const Mor<S> ancilla_first = compose(swap<S>(b, c), k.kraus());
  const Mor<S> starred = conj_star(ancilla_first, c, b);
  const Mor<S> doubled = tensor(starred, ancilla_first);
  const Mor<S> contract = tensor(tensor(identity<S>(b), cap<S>(c)), identity<S>(b));
  return compose(contract, doubled).retyped(a * a, b * b);
}

template <CompactScalar S>
class CpmMor {
 public:
  explicit CpmMor(KrausMor<S> kraus) : kraus_(std::move(kraus)), realized_(cpmform(kraus_)) {}

  const KrausMor<S> &kraus() const { return kraus_; }
  const Mor<S> &realized() const { return realized_; }

  friend bool operator==(const CpmMor &a, const CpmMor &b) { return a.realized_ == b.realized_; }

 private:
  CpmMor(KrausMor<S> kraus, Mor<S> realized) : kraus_(std::move(kraus)), realized_(std::move(realized)) {}

  template <CompactScalar T>
  friend CpmMor<T> cpm_compose(const CpmMor<T> &, const CpmMor<T> &);
  template <CompactScalar T>
  friend CpmMor<T> cpm_tensor(const CpmMor<T> &, const CpmMor<T> &);

  KrausMor<S> kraus_;
  Mor<S> realized_;
};

template <CompactScalar S>
CpmMor<S> cpm_identity(const Object &a) {
  return CpmMor<S>(cp_identity<S>(a));
}

/// The realized matrices multiply; the Kraus data nests exactly as in CP.
template <CompactScalar S>
CpmMor<S> cpm_compose(const CpmMor<S> &g, const CpmMor<S> &f) {
  KrausMor<S> k = cp_compose(g.kraus(), f.kraus());
  Mor<S> r = compose(g.realized(), f.realized()).retyped(k.in() * k.in(), k.out() * k.out());
  return CpmMor<S>(std::move(k), std::move(r));
}

/// Realized tensor: Kronecker product with the doubled wires interleaved so
/// that (A1 (x) A1) (x) (A2 (x) A2) becomes (A1 (x) A2) (x) (A1 (x) A2).
template <CompactScalar S>
CpmMor<S> cpm_tensor(const CpmMor<S> &f, const CpmMor<S> &g) {
  const Object &a1 = f.kraus().in(), &a2 = g.kraus().in();
  const Object &b1 = f.kraus().out(), &b2 = g.kraus().out();
  const Mor<S> in_order = permute_blocks<S>({a1, a1, a2, a2}, {0, 2, 1, 3});
  const Mor<S> out_order = permute_blocks<S>({b1, b1, b2, b2}, {0, 2, 1, 3});
  Mor<S> r = compose(out_order, compose(tensor(f.realized(), g.realized()), dagger(in_order)));
  return CpmMor<S>(cp_tensor(f.kraus(), g.kraus()), std::move(r));
}

/// Kraus morphism of the CPM dagger: (f^dag (x) id_C) o (id_B (x) eta_C) : B -> A (x) C.
template <CompactScalar S>
KrausMor<S> cpm_dagger(const KrausMor<S> &k) {
  const Object &a = k.in(), &b = k.out(), &c = k.ancilla();
  const Mor<S> open = tensor(identity<S>(b), cup<S>(c));
  const Mor<S> back = tensor(dagger(k.kraus()), identity<S>(c));
  return KrausMor<S>(compose(back, open), b, a, c);
}

template <CompactScalar S>
CpmMor<S> cpm_dagger(const CpmMor<S> &f) {
  return CpmMor<S>(cpm_dagger(f.kraus()));
}

/// The isomorphism CPM(C) -> CP(C) keeps the Kraus representative; only the
/// doubled form it is read through changes.
template <CompactScalar S>
KrausMor<S> cpm_to_cp(const KrausMor<S> &k) {
  return k;
}

template <CompactScalar S>
KrausMor<S> cp_to_cpm(const KrausMor<S> &k) {
  return k;
}

/// cpform[(a', b'), (a, b)] = cpmform[(b, b'), (a', a)].
template <Scalar S>
Mor<S> cpform_from_cpmform(const Mor<S> &realized, const Object &a, const Object &b) {
  const std::size_t na = a.total(), nb = b.total();
  if (realized.rows() != nb * nb || realized.cols() != na * na) {
    throw ShapeMismatch("realized matrix is not " + (b * b).str() + " x " + (a * a).str());
  }
  return Mor<S>::generate(a * b, a * b, [&](std::size_t row, std::size_t col) {
    const std::size_t ap = row / nb, bp = row % nb, ai = col / nb, bi = col % nb;
    return realized(bi * nb + bp, ap * na + ai);
  });
}

/// Inverse of cpform_from_cpmform.
template <Scalar S>
Mor<S> cpmform_from_cpform(const Mor<S> &form, const Object &a, const Object &b) {
  const std::size_t na = a.total(), nb = b.total();
  if (form.rows() != na * nb || form.cols() != na * nb) {
    throw ShapeMismatch("cpform is not square over " + (a * b).str());
  }
  return Mor<S>::generate(a * a, b * b, [&](std::size_t row, std::size_t col) {
    const std::size_t bp = row / nb, bi = row % nb, ap = col / na, ai = col % na;
    return form(ap * nb + bi, ai * nb + bp);
  });
}

}  // namespace cpkit
