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

#include <algorithm>

#include "catch2/catch_amalgamated.hpp"
#include "cpkit/channels.hpp"
#include "cpkit/eigen.hpp"
#include "cpkit/sampling.hpp"
#include "oracles.hpp"

using namespace cpkit;

namespace {

CMor random_hermitian(Sampler<Complex> &s, std::size_t n) {
  const CMor m = s.mor(Object{n}, Object{n});
  return CMor::generate(Object{n}, Object{n}, [&](std::size_t i, std::size_t j) {
    return 0.5 * (m(i, j) + std::conj(m(j, i)));
  });
}

CMor random_density(Sampler<Complex> &s, std::size_t n) {
  const CMor m = s.mor(Object{n}, Object{n});
  return compose(m, dagger(m));
}

}  // namespace

TEST_CASE("Jacobi eigensolver on random Hermitian matrices") {
  Sampler<Complex> s(61);
  for (std::size_t n = 1; n <= 9; ++n) {
    for (int t = 0; t < 5; ++t) {
      const CMor m = random_hermitian(s, n);
      const HermitianEigen e = hermitian_eigen(m);
      REQUIRE(e.values.size() == n);
      CHECK(std::is_sorted(e.values.begin(), e.values.end()));
      CHECK(eigen_residual(m, e) <= 1e-10);
      CHECK(max_abs_diff(compose(dagger(e.vectors), e.vectors), identity<Complex>(Object{n})) <= 1e-10);
      Complex trace = 0.0;
      double sum = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        trace += m(i, i);
        sum += e.values[i];
      }
      CHECK(std::abs(trace.real() - sum) <= 1e-10);
    }
  }
}

TEST_CASE("Jacobi eigensolver on a 2x2 closed form") {
  // [[a, b], [conj b, d]] has eigenvalues (a + d)/2 -+ sqrt(((a - d)/2)^2 + |b|^2).
  const double a = 0.3, d = -1.1;
  const Complex b(0.4, 0.7);
  const CMor m(Object{2}, Object{2}, {a, b, std::conj(b), d});
  const HermitianEigen e = hermitian_eigen(m);
  const double r = std::sqrt(0.25 * (a - d) * (a - d) + std::norm(b));
  CHECK(std::abs(e.values[0] - (0.5 * (a + d) - r)) <= 1e-14);
  CHECK(std::abs(e.values[1] - (0.5 * (a + d) + r)) <= 1e-14);
}

TEST_CASE("Jacobi eigensolver on degenerate spectra") {
  const HermitianEigen e = hermitian_eigen(identity<Complex>(Object{4}));
  for (double v : e.values) {
    CHECK(v == 1.0);
  }
  const HermitianEigen sw = hermitian_eigen(swap<Complex>(Object{3}, Object{3}));
  CHECK(std::count_if(sw.values.begin(), sw.values.end(), [](double v) { return std::abs(v + 1) < 1e-12; }) == 3);
  CHECK(std::count_if(sw.values.begin(), sw.values.end(), [](double v) { return std::abs(v - 1) < 1e-12; }) == 6);
}

TEST_CASE("vec is column-major") {
  const CMor m(Object{2}, Object{2}, {1.0, 2.0, 3.0, 4.0});
  CHECK(vec(m) == std::vector<Complex>{1.0, 3.0, 2.0, 4.0});
  CHECK(unvec(vec(m), 2) == m);
}

TEST_CASE("Choi of the identity channel") {
  const ChoiMatrix c = choi_of_kraus(cp_identity<Complex>(Object{2}));
  REQUIRE(c.matrix.rows() == 4);
  for (std::size_t r = 0; r < 4; ++r) {
    for (std::size_t col = 0; col < 4; ++col) {
      const bool one = (r == 0 || r == 3) && (col == 0 || col == 3);
      CHECK(c.matrix(r, col) == Complex(one ? 1.0 : 0.0));
    }
  }
}

TEST_CASE("Choi of the discard map is the identity") {
  const Object a{2};
  const CKraus discard(identity<Complex>(a), a, Object::unit(), a);
  const ChoiMatrix c = choi_of_kraus(discard);
  CHECK(c.out_dim == 1);
  CHECK(c.matrix == identity<Complex>(Object{2}));
}

TEST_CASE("Choi of a unitary is rank one") {
  Sampler<Complex> s(62);
  const CMor u = random_unitary(s, Object{3});
  const ChoiMatrix c = choi_of_kraus(pure(u));
  const std::vector<Complex> v = vec(u);
  const CMor outer = CMor::generate(Object{9}, Object{9}, [&](std::size_t i, std::size_t j) {
    return v[i] * std::conj(v[j]);
  });
  CHECK(max_abs_diff(c.matrix, outer) <= 1e-12);
  const HermitianEigen e = hermitian_eigen(c.matrix);
  CHECK(std::count_if(e.values.begin(), e.values.end(), [](double x) { return std::abs(x) > 1e-9; }) == 1);
}

TEST_CASE("Choi of Kraus agrees with the matrix-unit oracle") {
  Sampler<Complex> s(63);
  for (int t = 0; t < 30; ++t) {
    const CKraus k = s.kraus();
    CHECK(oracle::distance(oracle::choi(oracle::kraus_ops(k)), choi_of_kraus(k).matrix) <= 1e-12);
    CHECK(max_abs_diff(choi_of_superoperator(schrodinger_of(k)).matrix, choi_of_kraus(k).matrix) <= 1e-12);
  }
}

TEST_CASE("check_cp verdicts") {
  const CpCheck id = check_cp(choi_of_kraus(cp_identity<Complex>(Object{2})), 1e-9);
  CHECK(id.completely_positive);
  CHECK(std::abs(id.min_eigenvalue) <= 1e-9);
  const CpCheck tr = check_cp(transpose_map_choi(2), 1e-9);
  CHECK_FALSE(tr.completely_positive);
  CHECK(std::abs(tr.min_eigenvalue + 1.0) <= 1e-9);
  Sampler<Complex> s(64);
  for (int t = 0; t < 100; ++t) {
    CHECK(check_cp(choi_of_kraus(s.kraus()), 1e-9).completely_positive);
  }
  const CMor skew(Object{2}, Object{2}, {0.0, 1.0, -1.0, 0.0});
  CHECK_THROWS_AS(check_cp(skew, 1e-9), NotHermitian);
}

TEST_CASE("kraus_from_choi on the identity channel") {
  const DilationResult d = kraus_from_choi(choi_of_kraus(cp_identity<Complex>(Object{2})));
  REQUIRE(d.ancilla_dim == 1);
  REQUIRE(d.kraus_ops.size() == 1);
  const CMor &k = d.kraus_ops[0];
  const Complex phase = k(0, 0);
  CHECK(std::abs(std::abs(phase) - 1.0) <= 1e-10);
  CHECK(max_abs_diff(k, scale(identity<Complex>(Object{2}), phase)) <= 1e-10);
  CHECK(d.reconstruction_error <= 1e-10);
}

TEST_CASE("kraus_from_choi on the depolarizing channel") {
  const DilationResult d = kraus_from_choi(depolarizing_choi(2));
  CHECK(d.ancilla_dim == 4);
  CHECK(d.kraus_ops.size() == 4);
  CHECK(d.reconstruction_error <= 1e-10);
}

TEST_CASE("kraus_from_choi rejects the transpose map") {
  CHECK_THROWS_AS(kraus_from_choi(transpose_map_choi(2)), NotCompletelyPositive);
}

TEST_CASE("kraus_from_choi round trips random CP maps") {
  Sampler<Complex> s(65);
  for (int t = 0; t < 100; ++t) {
    const CKraus k = s.kraus();
    const ChoiMatrix c = choi_of_kraus(k);
    const DilationResult d = kraus_from_choi(c);
    CHECK(d.reconstruction_error <= 1e-8);
    CHECK(d.ancilla_dim <= k.ancilla().total());
    CHECK(cp_distance(d.dilation, k) <= 1e-8);
  }
}

TEST_CASE("Schroedinger and Heisenberg pictures") {
  Sampler<Complex> s(66);
  // Isometries give unital Heisenberg maps.
  for (int t = 0; t < 20; ++t) {
    const Object a = s.object(), b = s.object();
    const Object c{s.dim(std::max<std::size_t>(1, (a.total() + b.total() - 1) / b.total()), 3)};
    const CMor v = random_isometry(s, a, b * c);
    const CKraus k(v, a, b, c);
    CHECK(max_abs_diff(apply_heisenberg(k, identity<Complex>(b)), identity<Complex>(a)) <= 1e-10);
  }
  // Discarding traces out.
  const Object a{3};
  const CKraus discard(identity<Complex>(a), a, Object::unit(), a);
  const CMor rho = random_density(s, 3);
  const CMor tr = apply_schrodinger(discard, rho);
  REQUIRE(tr.rows() == 1);
  CHECK(std::abs(tr(0, 0) - (rho(0, 0) + rho(1, 1) + rho(2, 2))) <= 1e-12);
  CHECK(max_abs_diff(apply_heisenberg(discard, identity<Complex>(Object{1})), identity<Complex>(a)) <= 1e-12);
}

TEST_CASE("Heisenberg is adjoint to Schroedinger") {
  Sampler<Complex> s(67);
  for (int t = 0; t < 100; ++t) {
    const CKraus k = s.kraus();
    const CMor rho = s.mor(k.in(), k.in());
    const CMor x = s.mor(k.out(), k.out());
    const Complex lhs = trace_pairing(x, apply_schrodinger(k, rho));
    const Complex rhs = trace_pairing(apply_heisenberg(k, x), rho);
    CHECK(std::abs(lhs - rhs) <= 1e-9);
  }
}

TEST_CASE("superoperators act like their Kraus form") {
  Sampler<Complex> s(68);
  for (int t = 0; t < 20; ++t) {
    const CKraus f = s.kraus();
    const CKraus g = s.kraus(f.out(), s.object(), s.object());
    const CMor rho = s.mor(f.in(), f.in());
    const auto want = oracle::apply_kraus(oracle::kraus_ops(g), oracle::apply_kraus(oracle::kraus_ops(f), oracle::to_matrix(rho)));
    CHECK(oracle::distance(want, compose(schrodinger_of(g), schrodinger_of(f)).apply(rho)) <= 1e-10);
    CHECK(oracle::distance(want, apply_schrodinger(cp_compose(g, f), rho)) <= 1e-10);
    const CMor x = s.mor(g.out(), g.out());
    CHECK(max_abs_diff(heisenberg_of(f).apply(apply_heisenberg(g, x)), apply_heisenberg(cp_compose(g, f), x)) <= 1e-10);
  }
}

TEST_CASE("CP maps preserve Hermiticity") {
  Sampler<Complex> s(69);
  for (int t = 0; t < 50; ++t) {
    const CKraus k = s.kraus();
    const CMor h = random_hermitian(s, k.in().total());
    const CMor out = apply_schrodinger(k, h);
    CHECK(max_abs_diff(out, dagger(out)) <= 1e-12);
    const CMor x = s.mor(k.in(), k.in());
    CHECK(max_abs_diff(apply_schrodinger(k, dagger(x)), dagger(apply_schrodinger(k, x))) <= 1e-12);
  }
}
