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

#include "catch2/catch_amalgamated.hpp"
#include "cpkit/compact.hpp"
#include "cpkit/laws.hpp"
#include "cpkit/sampling.hpp"

using namespace cpkit;

static_assert(CompactScalar<Complex>);
static_assert(CompactScalar<Bool>);

TEST_CASE("cup on small objects") {
  CHECK(cup<Complex>(Object{1}) == CMor(Object::unit(), Object{1, 1}, {1.0}));
  const CMor c2 = cup<Complex>(Object{2});
  CHECK(c2.cod() == Object{2, 2});
  CHECK(c2.dom() == Object::unit());
  CHECK(c2 == CMor(Object::unit(), Object{2, 2}, {1.0, 0.0, 0.0, 1.0}));
}

TEST_CASE("cap after cup is the dimension") {
  for (std::size_t n = 1; n <= 4; ++n) {
    const CMor loop = compose(cap<Complex>(Object{n}), cup<Complex>(Object{n}));
    REQUIRE(loop.rows() == 1);
    CHECK(loop(0, 0) == Complex(static_cast<double>(n)));
  }
  CHECK(compose(cap<Bool>(Object{3}), cup<Bool>(Object{3}))(0, 0) == Bool(true));
}

TEST_CASE("snake and sliding identities") {
  Sampler<Complex> cs(5, 4);
  const LawReport c = check_compact_laws(cs, 4, 50, 1e-12);
  CHECK(c.max_violation() <= 1e-12);
  Sampler<Bool> bs(6, 4);
  const LawReport b = check_compact_laws(bs, 4, 50, 0.0);
  CHECK(b.max_violation() == 0.0);
}

TEST_CASE("conj_star trivial cases") {
  Sampler<Complex> s(7);
  // A real morphism with C = I is unchanged.
  CMor f = CMor::generate(Object{2}, Object{1, 3}, [&](std::size_t, std::size_t) { return s.scalar().real(); });
  CHECK(conj_star(f, Object::unit(), Object{3}) == f);
  const CMor i1(Object{1}, Object{1, 1}, {Complex(0, 1)});
  CHECK(conj_star(i1)(0, 0) == Complex(0, -1));
}

TEST_CASE("conj_star is permute then conjugate") {
  Sampler<Complex> s(8);
  for (int t = 0; t < 10; ++t) {
    const CMor f = s.mor(Object{2}, Object{2, 2});  // A -> C (x) B
    const CMor fs = conj_star(f);
    CHECK(fs.cod() == Object{2, 2});
    for (std::size_t a = 0; a < 2; ++a) {
      for (std::size_t c = 0; c < 2; ++c) {
        for (std::size_t b = 0; b < 2; ++b) {
          CHECK(fs(b * 2 + c, a) == std::conj(f(c * 2 + b, a)));
        }
      }
    }
  }
}

TEST_CASE("conj_star needs a split codomain") {
  CHECK_THROWS_AS(conj_star(identity<Complex>(Object{4})), MissingFactorSplit);
  CHECK_THROWS_AS(conj_star(identity<Complex>(Object{4}), Object{3}, Object{1}), DimensionMismatch);
}
