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
#include <cstdint>
#include <random>
#include <vector>

#include "cpkit/cp.hpp"
#include "cpkit/mor.hpp"

namespace cpkit {

/// Seeded source of random objects and morphisms. Complex entries have real
/// and imaginary parts uniform in [-1, 1]; boolean entries are fair coins.
/// Owns its engine, so one sampler per run or per thread.
template <Scalar S>
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed, std::size_t max_dim = 3) : rng_(seed), max_dim_(max_dim) {}

  std::mt19937_64 &engine() { return rng_; }
  std::size_t max_dim() const { return max_dim_; }

  std::size_t dim(std::size_t lo = 1) { return dim(lo, max_dim_); }
  std::size_t dim(std::size_t lo, std::size_t hi) { return std::uniform_int_distribution<std::size_t>(lo, hi)(rng_); }

  /// Single-factor object with dimension in [1, max_dim].
  Object object() { return Object{dim()}; }

  S scalar() {
    if constexpr (std::is_same_v<S, Complex>) {
      std::uniform_real_distribution<double> u(-1.0, 1.0);
      const double re = u(rng_);
      const double im = u(rng_);
      return {re, im};
    } else {
      return Bool(std::bernoulli_distribution(0.5)(rng_));
    }
  }

  Mor<S> mor(const Object &dom, const Object &cod) {
    return Mor<S>::generate(dom, cod, [&](std::size_t, std::size_t) { return scalar(); });
  }

  KrausMor<S> kraus(const Object &in, const Object &out, const Object &ancilla) {
    return KrausMor<S>(mor(in, out * ancilla), in, out, ancilla);
  }

  /// Random Kraus morphism with all three objects of dimension <= max_dim.
  KrausMor<S> kraus() {
    const Object in = object(), out = object(), anc = object();
    return kraus(in, out, anc);
  }

 private:
  std::mt19937_64 rng_;
  std::size_t max_dim_;
};

/// Orthonormalizes the columns of m (modified Gram-Schmidt). Requires
/// rows >= cols and full column rank, which random draws satisfy almost
/// surely.
inline CMor orthonormalize_columns(const CMor &m) {
  const std::size_t r = m.rows(), c = m.cols();
  if (r < c) {
    throw InvalidArgument("isometry needs cod dimension >= dom dimension");
  }
  std::vector<std::vector<Complex>> cols(c, std::vector<Complex>(r));
  for (std::size_t j = 0; j < c; ++j) {
    for (std::size_t i = 0; i < r; ++i) {
      cols[j][i] = m(i, j);
    }
  }
  for (std::size_t j = 0; j < c; ++j) {
    for (std::size_t p = 0; p < j; ++p) {
      Complex dot = 0.0;
      for (std::size_t i = 0; i < r; ++i) {
        dot += std::conj(cols[p][i]) * cols[j][i];
      }
      for (std::size_t i = 0; i < r; ++i) {
        cols[j][i] -= dot * cols[p][i];
      }
    }
    double norm = 0.0;
    for (const Complex &z : cols[j]) {
      norm += std::norm(z);
    }
    norm = std::sqrt(norm);
    if (norm < 1e-12) {
      throw InvalidArgument("columns are linearly dependent");
    }
    for (Complex &z : cols[j]) {
      z /= norm;
    }
  }
  return CMor::generate(m.dom(), m.cod(), [&](std::size_t i, std::size_t j) { return cols[j][i]; });
}

/// Random isometry dom -> cod (f^dag f = id).
inline CMor random_isometry(Sampler<Complex> &s, const Object &dom, const Object &cod) {
  return orthonormalize_columns(s.mor(dom, cod));
}

inline CMor random_unitary(Sampler<Complex> &s, const Object &a) { return random_isometry(s, a, a); }

}  // namespace cpkit
