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
#include <string>
#include <utility>
#include <vector>

#include "cpkit/compact.hpp"
#include "cpkit/sampling.hpp"

namespace cpkit {

/// Worst violation seen for each dagger symmetric monoidal law.
struct LawReport {
  std::size_t trials = 0;
  double tolerance = 0.0;
  std::vector<std::pair<std::string, double>> violations;

  double max_violation() const {
    double m = 0.0;
    for (const auto &[_, v] : violations) {
      m = std::max(m, v);
    }
    return m;
  }
  bool passed() const { return max_violation() <= tolerance; }
};

namespace detail {

inline void record(LawReport &r, const std::string &law, double v) {
  for (auto &[name, worst] : r.violations) {
    if (name == law) {
      worst = std::max(worst, v);
      return;
    }
  }
  r.violations.emplace_back(law, v);
}

}  // namespace detail

/// Randomized law suite. Each trial draws objects with dimensions up to the
/// sampler's max_dim and checks associativity, the unit laws, bifunctoriality
/// of the tensor, the dagger laws and symmetry. Violations are max-abs
/// distances (0 or 1 for booleans); the suite reports and never throws on a
/// failing law. tol is ignored for exact semirings.
template <Scalar S>
LawReport check_laws(Sampler<S> &sampler, std::size_t trials, double tol) {
  if (trials == 0) {
    throw InvalidArgument("law suite needs at least one trial");
  }
  LawReport r;
  r.trials = trials;
  r.tolerance = ScalarTraits<S>::exact ? 0.0 : tol;
  for (const char *law : {"associativity", "left_unit", "right_unit", "tensor_associativity", "tensor_unit",
                          "bifunctoriality", "dagger_involution", "dagger_antihomomorphism", "dagger_tensor",
                          "swap_involution", "swap_naturality"}) {
    r.violations.emplace_back(law, 0.0);
  }
  for (std::size_t t = 0; t < trials; ++t) {
    const Object a = sampler.object(), b = sampler.object(), c = sampler.object(), d = sampler.object();
    const Mor<S> f = sampler.mor(a, b);
    const Mor<S> g = sampler.mor(b, c);
    const Mor<S> h = sampler.mor(c, d);

    detail::record(r, "associativity", max_abs_diff(compose(compose(h, g), f), compose(h, compose(g, f))));
    detail::record(r, "left_unit", max_abs_diff(compose(identity<S>(b), f), f));
    detail::record(r, "right_unit", max_abs_diff(compose(f, identity<S>(a)), f));

    const Object a2 = sampler.object(), b2 = sampler.object(), c2 = sampler.object();
    const Mor<S> f2 = sampler.mor(a2, b2);
    const Mor<S> g2 = sampler.mor(b2, c2);
    detail::record(r, "tensor_associativity",
                   max_abs_diff(tensor(tensor(f, f2), g), tensor(f, tensor(f2, g))));
    detail::record(r, "tensor_unit",
                   std::max(max_abs_diff(tensor(f, identity<S>(Object::unit())), f),
                            max_abs_diff(tensor(identity<S>(Object::unit()), f), f)));
    detail::record(r, "bifunctoriality",
                   max_abs_diff(compose(tensor(g, g2), tensor(f, f2)), tensor(compose(g, f), compose(g2, f2))));

    detail::record(r, "dagger_involution", max_abs_diff(dagger(dagger(f)), f));
    detail::record(r, "dagger_antihomomorphism", max_abs_diff(dagger(compose(g, f)), compose(dagger(f), dagger(g))));
    detail::record(r, "dagger_tensor", max_abs_diff(dagger(tensor(f, f2)), tensor(dagger(f), dagger(f2))));

    detail::record(r, "swap_involution", max_abs_diff(compose(swap<S>(b, a), swap<S>(a, b)), identity<S>(a * b)));
    // swap(b, b2) o (f (x) f2) = (f2 (x) f) o swap(a, a2)
    detail::record(r, "swap_naturality",
                   max_abs_diff(compose(swap<S>(b, b2), tensor(f, f2)), compose(tensor(f2, f), swap<S>(a, a2))));
  }
  return r;
}

/// Snake and sliding identities for every object size in [1, max_dim], plus
/// `trials` random sliding checks. Violations as in check_laws.
template <CompactScalar S>
LawReport check_compact_laws(Sampler<S> &sampler, std::size_t max_dim, std::size_t trials, double tol) {
  LawReport r;
  r.trials = trials;
  r.tolerance = ScalarTraits<S>::exact ? 0.0 : tol;
  r.violations = {{"snake_left", 0.0}, {"snake_right", 0.0}, {"sliding", 0.0}};
  for (std::size_t n = 1; n <= max_dim; ++n) {
    const Object a{n};
    const Mor<S> id = identity<S>(a);
    // (eps (x) id) o (id (x) eta) = id
    detail::record(r, "snake_left", max_abs_diff(compose(tensor(cap<S>(a), id), tensor(id, cup<S>(a))), id));
    // (id (x) eps) o (eta (x) id) = id
    detail::record(r, "snake_right", max_abs_diff(compose(tensor(id, cap<S>(a)), tensor(cup<S>(a), id)), id));
  }
  for (std::size_t t = 0; t < trials; ++t) {
    const Object a = sampler.object(), b = sampler.object();
    const Mor<S> f = sampler.mor(a, b);
    // (f (x) id_a) o eta_a = (id_b (x) f^T) o eta_b
    const Mor<S> lhs = compose(tensor(f, identity<S>(a)), cup<S>(a));
    const Mor<S> rhs = compose(tensor(identity<S>(b), transpose(f)), cup<S>(b));
    detail::record(r, "sliding", max_abs_diff(lhs, rhs));
  }
  return r;
}

}  // namespace cpkit
