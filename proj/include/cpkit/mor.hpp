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

#include <algorithm>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cpkit/errors.hpp"
#include "cpkit/object.hpp"
#include "cpkit/scalar.hpp"

namespace cpkit {

/// A morphism dom -> cod of a matrix category over the semiring S, stored as a
/// dense row-major total(cod) x total(dom) matrix. Immutable once built.
template <Scalar S>
class Mor {
 public:
  using scalar_type = S;

  Mor(Object dom, Object cod, std::vector<S> entries)
      : dom_(std::move(dom)), cod_(std::move(cod)), entries_(std::move(entries)) {
    if (entries_.size() != rows() * cols()) {
      throw ShapeMismatch("expected " + std::to_string(rows() * cols()) + " entries, got " +
                          std::to_string(entries_.size()));
    }
  }

  static Mor zero(Object dom, Object cod) {
    std::vector<S> e(dom.total() * cod.total(), ScalarTraits<S>::zero());
    return Mor(std::move(dom), std::move(cod), std::move(e));
  }

  static Mor identity(const Object &a) {
    const std::size_t n = a.total();
    std::vector<S> e(n * n, ScalarTraits<S>::zero());
    for (std::size_t i = 0; i < n; ++i) {
      e[i * n + i] = ScalarTraits<S>::one();
    }
    return Mor(a, a, std::move(e));
  }

  /// Builds the morphism whose (row, col) entry is fn(row, col).
  template <class Fn>
  static Mor generate(Object dom, Object cod, Fn &&fn) {
    const std::size_t r = cod.total();
    const std::size_t c = dom.total();
    std::vector<S> e;
    e.reserve(r * c);
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = 0; j < c; ++j) {
        e.push_back(static_cast<S>(fn(i, j)));
      }
    }
    return Mor(std::move(dom), std::move(cod), std::move(e));
  }

  const Object &dom() const { return dom_; }
  const Object &cod() const { return cod_; }
  std::size_t rows() const { return cod_.total(); }
  std::size_t cols() const { return dom_.total(); }
  const S &operator()(std::size_t r, std::size_t c) const { return entries_[r * cols() + c]; }
  std::span<const S> entries() const { return entries_; }

  /// Same matrix under a different factor bracketing of equal total size.
  Mor retyped(Object dom, Object cod) const {
    if (dom.total() != dom_.total() || cod.total() != cod_.total()) {
      throw DimensionMismatch("cannot retype " + dom_.str() + " -> " + cod_.str() + " as " + dom.str() +
                              " -> " + cod.str());
    }
    return Mor(std::move(dom), std::move(cod), entries_);
  }

  /// Entrywise equality of the matrices; factor words are not compared.
  friend bool operator==(const Mor &a, const Mor &b) {
    return a.rows() == b.rows() && a.cols() == b.cols() && a.entries_ == b.entries_;
  }

 private:
  Object dom_;
  Object cod_;
  std::vector<S> entries_;
};

using CMor = Mor<Complex>;
using RMor = Mor<Bool>;

/// g o f.
template <Scalar S>
Mor<S> compose(const Mor<S> &g, const Mor<S> &f) {
  if (!composable(g.dom(), f.cod())) {
    throw DimensionMismatch("cannot compose: cod " + f.cod().str() + " of first morphism vs dom " + g.dom().str() +
                            " of second");
  }
  const std::size_t n = g.rows(), m = f.cols(), k = f.rows();
  std::vector<S> e(n * m, ScalarTraits<S>::zero());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t l = 0; l < k; ++l) {
      const S gil = g(i, l);
      if (gil == ScalarTraits<S>::zero()) {
        continue;
      }
      for (std::size_t j = 0; j < m; ++j) {
        e[i * m + j] += gil * f(l, j);
      }
    }
  }
  return Mor<S>(f.dom(), g.cod(), std::move(e));
}

/// Left-to-right composite: compose_all({f1, f2, f3}) = f3 o f2 o f1.
template <Scalar S>
Mor<S> compose_all(std::initializer_list<Mor<S>> chain) {
  auto it = chain.begin();
  Mor<S> acc = *it;
  for (++it; it != chain.end(); ++it) {
    acc = compose(*it, acc);
  }
  return acc;
}

/// Kronecker product under the big-endian index convention.
template <Scalar S>
Mor<S> tensor(const Mor<S> &f, const Mor<S> &g) {
  const std::size_t fr = f.rows(), fc = f.cols(), gr = g.rows(), gc = g.cols();
  const std::size_t cols = fc * gc;
  std::vector<S> e(fr * gr * cols);
  for (std::size_t a = 0; a < fr; ++a) {
    for (std::size_t b = 0; b < gr; ++b) {
      for (std::size_t c = 0; c < fc; ++c) {
        const S fac = f(a, c);
        for (std::size_t d = 0; d < gc; ++d) {
          e[(a * gr + b) * cols + c * gc + d] = fac * g(b, d);
        }
      }
    }
  }
  return Mor<S>(f.dom() * g.dom(), f.cod() * g.cod(), std::move(e));
}

/// Entrywise conjugate (the identity on booleans).
template <Scalar S>
Mor<S> conj(const Mor<S> &f) {
  return Mor<S>::generate(f.dom(), f.cod(), [&](std::size_t r, std::size_t c) { return ScalarTraits<S>::conj(f(r, c)); });
}

/// Conjugate transpose: cod -> dom.
template <Scalar S>
Mor<S> dagger(const Mor<S> &f) {
  return Mor<S>::generate(f.cod(), f.dom(), [&](std::size_t r, std::size_t c) { return ScalarTraits<S>::conj(f(c, r)); });
}

/// Plain transpose, i.e. conj(dagger(f)).
template <Scalar S>
Mor<S> transpose(const Mor<S> &f) {
  return Mor<S>::generate(f.cod(), f.dom(), [&](std::size_t r, std::size_t c) { return f(c, r); });
}

template <Scalar S>
Mor<S> scale(const Mor<S> &f, S s) {
  return Mor<S>::generate(f.dom(), f.cod(), [&](std::size_t r, std::size_t c) { return s * f(r, c); });
}

template <Scalar S>
Mor<S> identity(const Object &a) {
  return Mor<S>::identity(a);
}

/// Symmetry a*b -> b*a sending e_i (x) e_j to e_j (x) e_i.
template <Scalar S>
Mor<S> swap(const Object &a, const Object &b) {
  const std::size_t na = a.total(), nb = b.total();
  std::vector<S> e(na * nb * na * nb, ScalarTraits<S>::zero());
  const std::size_t cols = na * nb;
  for (std::size_t i = 0; i < na; ++i) {
    for (std::size_t j = 0; j < nb; ++j) {
      e[(j * na + i) * cols + (i * nb + j)] = ScalarTraits<S>::one();
    }
  }
  return Mor<S>(a * b, b * a, std::move(e));
}

/// Permutes tensor blocks: the domain is blocks[0] * ... * blocks[k-1]; output
/// position p carries input block order[p].
template <Scalar S>
Mor<S> permute_blocks(const std::vector<Object> &blocks, const std::vector<std::size_t> &order) {
  const std::size_t k = blocks.size();
  if (order.size() != k) {
    throw InvalidArgument("block order has wrong length");
  }
  std::vector<bool> seen(k, false);
  for (std::size_t p : order) {
    if (p >= k || seen[p]) {
      throw InvalidArgument("block order is not a permutation");
    }
    seen[p] = true;
  }
  std::vector<std::size_t> sizes(k);
  std::vector<Object> out_blocks(k);
  for (std::size_t i = 0; i < k; ++i) {
    sizes[i] = blocks[i].total();
    out_blocks[i] = blocks[order[i]];
  }
  const Object dom = tensor_all(blocks);
  const Object cod = tensor_all(out_blocks);
  const std::size_t n = dom.total();
  std::vector<S> e(n * n, ScalarTraits<S>::zero());
  std::vector<std::size_t> digits(k);
  for (std::size_t in = 0; in < n; ++in) {
    std::size_t rest = in;
    for (std::size_t i = k; i-- > 0;) {
      digits[i] = rest % sizes[i];
      rest /= sizes[i];
    }
    std::size_t out = 0;
    for (std::size_t p = 0; p < k; ++p) {
      out = out * sizes[order[p]] + digits[order[p]];
    }
    e[out * n + in] = ScalarTraits<S>::one();
  }
  return Mor<S>(dom, cod, std::move(e));
}

/// Maximum entrywise distance; shapes must agree.
template <Scalar S>
double max_abs_diff(const Mor<S> &a, const Mor<S> &b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw ShapeMismatch("cannot compare " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " with " +
                        std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  }
  double worst = 0.0;
  for (std::size_t i = 0; i < a.entries().size(); ++i) {
    worst = std::max(worst, ScalarTraits<S>::distance(a.entries()[i], b.entries()[i]));
  }
  return worst;
}

/// Equality under the instance's notion: exact for booleans, max-abs within
/// tol for complex matrices. Mismatched shapes are simply unequal.
template <Scalar S>
bool approx_equal(const Mor<S> &a, const Mor<S> &b, double tol) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    return false;
  }
  if constexpr (ScalarTraits<S>::exact) {
    return a == b;
  } else {
    return max_abs_diff(a, b) <= tol;
  }
}

}  // namespace cpkit
