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

#include <numbers>

#include "catch2/catch_amalgamated.hpp"
#include "cpkit/axioms.hpp"

using namespace cpkit;

namespace {

std::vector<Object> small_objects() { return {Object{1}, Object{2}, Object{3}}; }

template <Scalar S>
EnvStructure<S> doubled_discard() {
  return {[](const Object &a) { return KrausMor<S>(scale(identity<S>(a), S(2.0)), a, Object::unit(), a); }};
}

}  // namespace

TEST_CASE("env-a holds for the canonical discard") {
  const auto c = check_env_a(EnvStructure<Complex>::canonical(), small_objects(), 1e-12);
  CHECK(c.holds());
  CHECK(c.max_deviation <= 1e-12);
  CHECK(c.samples == 10);
  const auto b = check_env_a(EnvStructure<Bool>::canonical(), small_objects(), 0.0);
  CHECK(b.holds());
  CHECK(b.max_deviation == 0.0);
  CHECK(check_env_a(EnvStructure<Complex>::canonical(), {Object{4}, Object{2, 2}}, 1e-12).holds());
}

TEST_CASE("env-a catches a corrupted discard") {
  const auto r = check_env_a(doubled_discard<Complex>(), small_objects(), 1e-12);
  REQUIRE_FALSE(r.holds());
  CHECK(r.status == AxiomStatus::Fails);
  REQUIRE(r.witness);
  // |2|^2 - 1 on the unit object.
  CHECK(r.witness->deviation == Catch::Approx(3.0).margin(1e-12));
  CHECK(r.witness->claim == "T_I = id_I");
}

TEST_CASE("env-b on ancilla-unitary and equal pairs") {
  const auto env = EnvStructure<Complex>::canonical();
  Sampler<Complex> s(71);
  for (int t = 0; t < 20; ++t) {
    const Object a = s.object(), c = s.object(), b = s.object();
    const CMor f = s.mor(a, c * b);
    const CMor u = random_unitary(s, c);
    const CMor g = compose(tensor(u, identity<Complex>(b)), f);
    const auto r = check_env_b_pair(env, f, g, c, b, 1e-9);
    CHECK(r.holds());
    CHECK(r.max_deviation <= 1e-9);
    CHECK(check_env_b_pair(env, f, f, c, b, 1e-9).holds());
  }
}

TEST_CASE("env-b biconditional on random pairs") {
  const auto env = EnvStructure<Complex>::canonical();
  Sampler<Complex> s(72);
  for (int t = 0; t < 100; ++t) {
    const Object a{2}, c{2}, b{2};
    const auto r = check_env_b_pair(env, s.mor(a, c * b), s.mor(a, c * b), c, b, 1e-9);
    CHECK(r.holds());
  }
  CHECK(env_b_suite(env, s, 100, 1e-9).holds());
  Sampler<Bool> bs(73);
  CHECK(env_b_suite(EnvStructure<Bool>::canonical(), bs, 100, 0.0).holds());
}

TEST_CASE("env-b rejects non-parallel input") {
  Sampler<Complex> s(74);
  CHECK_THROWS_AS(check_env_b_pair(EnvStructure<Complex>::canonical(), s.mor(Object{2}, Object{4}),
                                   s.mor(Object{3}, Object{4}), Object{2}, Object{2}, 1e-9),
                  DimensionMismatch);
}

TEST_CASE("env-c extracts witnesses") {
  const auto env = EnvStructure<Complex>::canonical();
  CHECK(check_env_c(env, cp_identity<Complex>(Object{2}), 1e-8).holds());
  Sampler<Complex> s(75);
  const auto r = env_c_suite(env, s, 100, 1e-8);
  CHECK(r.holds());
  CHECK(r.samples == 100);
  CHECK(r.max_deviation <= 1e-8);
  CHECK_THROWS_AS(check_env_c_choi(env, transpose_map_choi(2), 1e-8), NotCompletelyPositive);
}

TEST_CASE("doubling on phase pairs and equal pairs") {
  Sampler<Complex> s(76);
  const CMor f = s.mor(Object{2}, Object{3});
  const auto r = check_doubling_pair(pure(f), pure(scale(f, std::polar(1.0, std::numbers::pi / 4))), 1e-9);
  CHECK(r.holds());
  CHECK(check_doubling_pair(pure(f), pure(f), 1e-9).holds());
  const auto suite = doubling_suite(s, 100, 1e-9);
  CHECK(suite.holds());
  CHECK(suite.samples == 100);
  CHECK(suite.summary() == "holds on 100 samples");
  Sampler<Bool> bs(77);
  CHECK(doubling_suite(bs, 100, 0.0).holds());
}

TEST_CASE("doubling fails in the base category") {
  const auto r = doubling_base_counterexample(1e-9);
  CHECK(r.status == AxiomStatus::Counterexample);
  REQUIRE(r.witness);
  CHECK(r.witness->deviation == 2.0);
  REQUIRE(r.witness->data.size() == 4);
  CHECK(r.witness->data[0].second(0, 0) == Complex(1.0));
  CHECK(r.witness->data[1].second(0, 0) == Complex(-1.0));
}

TEST_CASE("preparation-state agreement for CPM states") {
  Sampler<Complex> s(78);
  const Object b{2}, c{2};
  const CMor f = s.mor(Object::unit(), b * c);
  const CpmMor<Complex> phi(CKraus(f, Object::unit(), b, c));
  CHECK(check_prep_state_pair(phi, phi, 1e-9).holds());
  for (double theta : {0.0, std::numbers::pi / 2, std::numbers::pi}) {
    const CpmMor<Complex> psi(CKraus(scale(f, std::polar(1.0, theta)), Object::unit(), b, c));
    const CMor pp = compose(phi.realized(), dagger(phi.realized()));
    const CMor qq = compose(psi.realized(), dagger(psi.realized()));
    CHECK(max_abs_diff(pp, qq) <= 1e-9);
    CHECK(max_abs_diff(phi.realized(), psi.realized()) <= 1e-9);
    CHECK(check_prep_state_pair(phi, psi, 1e-9).holds());
  }
  CHECK(prep_state_suite(s, 100, 1e-9).holds());
  const CpmMor<Complex> not_state(s.kraus(Object{2}, b, c));
  CHECK_THROWS_AS(check_prep_state_pair(not_state, not_state, 1e-9), DomainNotUnit);
}

TEST_CASE("preparation-state agreement fails for raw states") {
  const auto r = prep_state_base_counterexample(1e-9);
  CHECK(r.status == AxiomStatus::Counterexample);
  REQUIRE(r.witness);
  CHECK(r.witness->deviation == 2.0);
  CHECK(r.axiom == "prep-state-base");
}

TEST_CASE("realign moves indices") {
  Sampler<Complex> s(79);
  for (std::size_t n = 1; n <= 3; ++n) {
    const Object b{n};
    const CMor m = s.mor(b * b, b * b);
    const CMor r = realign(m, b);
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = 0; q < n; ++q)
        for (std::size_t u = 0; u < n; ++u)
          for (std::size_t v = 0; v < n; ++v) {
            CHECK(std::abs(r(p * n + q, u * n + v) - m(p * n + u, q * n + v)) <= 1e-12);
          }
  }
}

TEST_CASE("proposition replay") {
  const CMor id = identity<Complex>(Object{2});
  const auto r = replay_proposition_steps(id, id, 1e-12);
  CHECK(r.holds());
  CHECK(r.max_deviation <= 1e-12);
  Sampler<Complex> s(80);
  const auto c = replay_suite(s, 50, 1e-9);
  CHECK(c.holds());
  CHECK(c.max_deviation <= 1e-9);
  Sampler<Bool> bs(81, 4);
  const auto b = replay_suite(bs, 50, 0.0);
  CHECK(b.holds());
  CHECK(b.max_deviation == 0.0);
}

TEST_CASE("xi is an identity-on-objects functor") {
  const auto env = EnvStructure<Complex>::canonical();
  const CKraus one = cp_identity<Complex>(Object{3});
  CHECK(cp_equal(xi(env, one), one, 1e-12));
  Sampler<Complex> s(82);
  const auto r = xi_iso_check(env, s, 100, 1e-9);
  CHECK(r.holds());
  CHECK(r.max_deviation <= 1e-9);
  Sampler<Bool> bs(83);
  CHECK(xi_iso_check(EnvStructure<Bool>::canonical(), bs, 50, 0.0).holds());
}

TEST_CASE("report merge keeps the first witness") {
  AxiomReport<Complex> a{"x"};
  AxiomReport<Complex> b{"x"};
  b.status = AxiomStatus::Fails;
  b.samples = 2;
  b.witness = Witness<Complex>{"first", {}, 1.0};
  AxiomReport<Complex> c{"x"};
  c.status = AxiomStatus::Counterexample;
  c.witness = Witness<Complex>{"second", {}, 5.0};
  a.merge(b);
  a.merge(c);
  CHECK(a.samples == 2);
  CHECK(a.status == AxiomStatus::Fails);
  CHECK(a.witness->claim == "first");
}
