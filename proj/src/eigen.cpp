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

#include "cpkit/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace cpkit {

namespace {

constexpr int kMaxSweeps = 100;

struct Square {
  std::size_t n;
  std::vector<Complex> a;
  Complex &operator()(std::size_t i, std::size_t j) { return a[i * n + j]; }
};

double off_diagonal_norm(Square &m) {
  double s = 0.0;
  for (std::size_t i = 0; i < m.n; ++i) {
    for (std::size_t j = 0; j < m.n; ++j) {
      if (i != j) {
        s += std::norm(m(i, j));
      }
    }
  }
  return std::sqrt(s);
}

}  // namespace

HermitianEigen hermitian_eigen(const CMor &m) {
  if (m.rows() != m.cols()) {
    throw ShapeMismatch("eigendecomposition needs a square matrix");
  }
  const std::size_t n = m.rows();
  Square a{n, std::vector<Complex>(n * n)};
  Square v{n, std::vector<Complex>(n * n, 0.0)};
  double scale = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    v(i, i) = 1.0;
    for (std::size_t j = 0; j < n; ++j) {
      a(i, j) = 0.5 * (m(i, j) + std::conj(m(j, i)));
      scale += std::norm(a(i, j));
    }
  }
  const double threshold = 1e-15 * std::max(std::sqrt(scale), 1e-300);

  for (int sweep = 0; sweep < kMaxSweeps && off_diagonal_norm(a) > threshold; ++sweep) {
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double mag = std::abs(a(p, q));
        if (mag < 1e-300) {
          continue;
        }
        // Rephase the pivot to a real positive value, then apply the real
        // symmetric rotation: V = [[c, s w], [-s conj(w), c]] with w = a_pq/|a_pq|.
        const Complex w = a(p, q) / mag;
        const double theta = (a(q, q).real() - a(p, p).real()) / (2.0 * mag);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        const Complex vpq = s * w;
        const Complex vqp = -s * std::conj(w);

        for (std::size_t k = 0; k < n; ++k) {  // A <- A V
          const Complex akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp + vqp * akq;
          a(k, q) = vpq * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {  // A <- V^dag A
          const Complex apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk + std::conj(vqp) * aqk;
          a(q, k) = std::conj(vpq) * apk + c * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        for (std::size_t k = 0; k < n; ++k) {  // V_total <- V_total V
          const Complex vkp = v(k, p), vkq = v(k, q);
          v(k, p) = c * vkp + vqp * vkq;
          v(k, q) = vpq * vkp + c * vkq;
        }
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return a(x, x).real() < a(y, y).real(); });

  HermitianEigen out{{}, CMor::generate(m.dom(), m.dom(), [&](std::size_t i, std::size_t k) { return v(i, order[k]); })};
  out.values.reserve(n);
  for (std::size_t k : order) {
    out.values.push_back(a(k, k).real());
  }
  return out;
}

double eigen_residual(const CMor &m, const HermitianEigen &e) {
  const std::size_t n = m.rows();
  double worst = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    double r = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      Complex mv = 0.0;
      for (std::size_t j = 0; j < n; ++j) {
        mv += m(i, j) * e.vectors(j, k);
      }
      r += std::norm(mv - e.values[k] * e.vectors(i, k));
    }
    worst = std::max(worst, std::sqrt(r));
  }
  return worst;
}

}  // namespace cpkit
