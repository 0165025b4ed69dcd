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

// Property checkers for environment structures and the doubling axiom.
//
// The supercategory of an environment structure is always CP(C) here, with
// C embedded through the pure lift and discarding given by Kraus id_A. Checks
// of universally quantified statements are sampled; a report says "holds on
// N samples", and a failing report carries the matrices that witness it.

#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cpkit/channels.hpp"
#include "cpkit/cp.hpp"
#include "cpkit/cpm.hpp"
#include "cpkit/sampling.hpp"

namespace cpkit {

enum class AxiomStatus { Holds, Fails, Counterexample };

inline const char *to_string(AxiomStatus s) {
  switch (s) {
    case AxiomStatus::Holds:
      return "holds";
    case AxiomStatus::Fails:
      return "fails";
    case AxiomStatus::Counterexample:
      return "counterexample";
  }
  return "?";
}

template <Scalar S>
struct Witness {
  std::string claim;
  std::vector<std::pair<std::string, Mor<S>>> data;
  double deviation = 0.0;
};

template <Scalar S>
struct AxiomReport {
  AxiomReport() = default;
  explicit AxiomReport(std::string name) : axiom(std::move(name)) {}

  std::string axiom;
  AxiomStatus status = AxiomStatus::Holds;
  std::size_t samples = 0;
  /// Largest distance seen on any equation that was expected to hold.
  double max_deviation = 0.0;
  std::optional<Witness<S>> witness;

  bool holds() const { return status == AxiomStatus::Holds; }

  std::string summary() const {
    if (holds()) {
      return "holds on " + std::to_string(samples) + " samples";
    }
    return std::string(to_string(status)) + ": " + (witness ? witness->claim : std::string("?"));
  }

  /// Folds another report on the same axiom into this one; the first failure
  /// keeps its witness.
  void merge(const AxiomReport &other) {
    samples += other.samples;
    max_deviation = std::max(max_deviation, other.max_deviation);
    if (holds() && !other.holds()) {
      status = other.status;
      witness = other.witness;
    }
  }
};

/// The discard assignment A |-> T_A of an environment structure over CP(C).
template <Scalar S>
struct EnvStructure {
  std::function<KrausMor<S>(const Object &)> discard;

  /// T_A has Kraus morphism id_A : A -> I (x) A, ancilla A.
  static EnvStructure canonical() {
    return {[](const Object &a) { return KrausMor<S>(identity<S>(a), a, Object::unit(), a); }};
  }
};

namespace detail {

template <Scalar S>
bool within(double d, double tol) {
  if constexpr (ScalarTraits<S>::exact) {
    return d == 0.0;
  } else {
    return d <= tol;
  }
}

/// Distance between possibly differently shaped morphisms; shape mismatch
/// counts as infinitely far.
template <Scalar S>
double distance(const Mor<S> &a, const Mor<S> &b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    return INFINITY;
  }
  return max_abs_diff(a, b);
}

template <Scalar S>
void expect_equal(AxiomReport<S> &r, const std::string &claim, const Mor<S> &lhs, const Mor<S> &rhs, double tol) {
  ++r.samples;
  const double d = distance(lhs, rhs);
  r.max_deviation = std::max(r.max_deviation, d);
  if (!within<S>(d, tol) && r.holds()) {
    r.status = AxiomStatus::Fails;
    r.witness = Witness<S>{claim, {{"lhs", lhs}, {"rhs", rhs}}, d};
  }
}

/// Records whether left <=> right; a mismatch is a counterexample.
template <Scalar S>
void expect_iff(AxiomReport<S> &r, const std::string &claim, double left_distance, double right_distance, double tol,
                std::vector<std::pair<std::string, Mor<S>>> data) {
  ++r.samples;
  const bool left = within<S>(left_distance, tol);
  const bool right = within<S>(right_distance, tol);
  if (left && right) {
    r.max_deviation = std::max({r.max_deviation, left_distance, right_distance});
  }
  if (left != right && r.holds()) {
    r.status = AxiomStatus::Counterexample;
    r.witness = Witness<S>{claim + " (left " + (left ? "equal" : "unequal") + ", right " +
                               (right ? "equal" : "unequal") + ")",
                           std::move(data), left ? right_distance : left_distance};
  }
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Environment structure axioms.

/// (a): T_I = id_I and T_A (x) T_B = T_{A (x) B} for every pair of the given
/// objects.
template <Scalar S>
AxiomReport<S> check_env_a(const EnvStructure<S> &env, const std::vector<Object> &objects, double tol) {
  AxiomReport<S> r{"env-a"};
  const Object unit = Object::unit();
  detail::expect_equal(r, "T_I = id_I", cpform(env.discard(unit)), cpform(cp_identity<S>(unit)), tol);
  for (const Object &a : objects) {
    for (const Object &b : objects) {
      detail::expect_equal(r, "T_" + a.str() + " (x) T_" + b.str() + " = T_" + (a * b).str(),
                           cpform(cp_tensor(env.discard(a), env.discard(b))), cpform(env.discard(a * b)), tol);
    }
  }
  return r;
}

/// The discarded image (T_C (x) id_B) o f in CP(C) of f : A -> C (x) B.
template <Scalar S>
KrausMor<S> discard_ancilla_first(const EnvStructure<S> &env, const Mor<S> &f, const Object &c, const Object &b) {
  const KrausMor<S> ground = cp_tensor(env.discard(c), cp_identity<S>(b));
  return cp_compose(ground, pure(f.retyped(f.dom(), c * b)));
}

/// (b) for one pair f, g : A -> C (x) B. Left: the CP(C) forms of f and g with
/// ancilla C agree in C. Right: (T_C (x) id_B) o f = (T_C (x) id_B) o g in the
/// supercategory.
template <Scalar S>
AxiomReport<S> check_env_b_pair(const EnvStructure<S> &env, const Mor<S> &f, const Mor<S> &g, const Object &c,
                                const Object &b, double tol) {
  if (!composable(f.dom(), g.dom()) || !composable(f.cod(), g.cod()) || (c * b).total() != f.cod().total()) {
    throw DimensionMismatch("env-b needs parallel f, g : A -> " + c.str() + " (x) " + b.str());
  }
  AxiomReport<S> r{"env-b"};
  const Object a = f.dom();
  auto as_kraus = [&](const Mor<S> &h) {
    return KrausMor<S>(compose(swap<S>(c, b), h.retyped(a, c * b)), a, b, c);
  };
  const Mor<S> left_f = cpform(as_kraus(f)), left_g = cpform(as_kraus(g));
  const Mor<S> right_f = cpform(discard_ancilla_first(env, f, c, b));
  const Mor<S> right_g = cpform(discard_ancilla_first(env, g, c, b));
  const double dl = max_abs_diff(left_f, left_g);
  const double dr = max_abs_diff(right_f, right_g);
  detail::expect_iff<S>(r, "doubled f = doubled g <=> discarded f = discarded g", dl, dr, tol,
                        {{"f", f}, {"g", g}, {"doubled_f", left_f}, {"doubled_g", left_g}, {"discarded_f", right_f},
                         {"discarded_g", right_g}});
  return r;
}

// ---------------------------------------------------------------------------
// Doubling and preparation-state agreement.

/// Doubling in CP(C): f (x) f = g (x) g <=> f = g.
template <Scalar S>
AxiomReport<S> check_doubling_pair(const KrausMor<S> &f, const KrausMor<S> &g, double tol) {
  if (!composable(f.in(), g.in()) || !composable(f.out(), g.out())) {
    throw DimensionMismatch("doubling needs parallel morphisms");
  }
  AxiomReport<S> r{"doubling"};
  const Mor<S> ff = cpform(cp_tensor(f, f)), gg = cpform(cp_tensor(g, g));
  const Mor<S> f1 = cpform(f), g1 = cpform(g);
  detail::expect_iff<S>(r, "f (x) f = g (x) g <=> f = g", max_abs_diff(ff, gg), max_abs_diff(f1, g1), tol,
                        {{"f", f1}, {"g", g1}, {"f_squared", ff}, {"g_squared", gg}});
  return r;
}

/// Doubling read in the base category C itself.
template <Scalar S>
AxiomReport<S> check_doubling_base(const Mor<S> &f, const Mor<S> &g, double tol) {
  if (!composable(f.dom(), g.dom()) || !composable(f.cod(), g.cod())) {
    throw DimensionMismatch("doubling needs parallel morphisms");
  }
  AxiomReport<S> r{"doubling-base"};
  const Mor<S> ff = tensor(f, f), gg = tensor(g, g);
  detail::expect_iff<S>(r, "f (x) f = g (x) g <=> f = g in the base category", max_abs_diff(ff, gg),
                        max_abs_diff(f, g), tol, {{"f", f}, {"g", g}, {"f_squared", ff}, {"g_squared", gg}});
  return r;
}

namespace detail {

template <Scalar S>
AxiomReport<S> prep_state_on(const std::string &name, const Mor<S> &f, const Mor<S> &g, double tol) {
  if (f.cols() != 1 || g.cols() != 1) {
    throw DomainNotUnit("preparation-state agreement needs states with domain I");
  }
  AxiomReport<S> r{name};
  ++r.samples;
  const Mor<S> ff = compose(f, dagger(f)), gg = compose(g, dagger(g));
  const double da = distance(ff, gg), dc = distance(f, g);
  const bool antecedent = within<S>(da, tol), consequent = within<S>(dc, tol);
  if (antecedent) {
    r.max_deviation = std::max(r.max_deviation, da);
  }
  if (antecedent && !consequent) {
    r.status = AxiomStatus::Counterexample;
    r.witness = Witness<S>{"f o f^dag = g o g^dag but f != g", {{"f", f}, {"g", g}, {"ff_dag", ff}, {"gg_dag", gg}}, dc};
  }
  return r;
}

}  // namespace detail

/// f o f^dag = g o g^dag => f = g for CPM states (realized matrices).
template <CompactScalar S>
AxiomReport<S> check_prep_state_pair(const CpmMor<S> &phi, const CpmMor<S> &psi, double tol) {
  if (phi.kraus().in().total() != 1 || psi.kraus().in().total() != 1) {
    throw DomainNotUnit("preparation-state agreement needs CPM states with domain I");
  }
  return detail::prep_state_on<S>("prep-state", phi.realized(), psi.realized(), tol);
}

/// The same implication read in the base category C.
template <Scalar S>
AxiomReport<S> check_prep_state_base(const Mor<S> &f, const Mor<S> &g, double tol) {
  return detail::prep_state_on<S>("prep-state-base", f, g, tol);
}

// ---------------------------------------------------------------------------
// Replay of the argument that doubling for C gives preparation-state
// agreement for CPM(C).

/// Realignment N[(p, q), (r, s)] = M[(p, r), (q, s)] of M : B (x) B -> B (x) B,
/// built from a cup, a cap and two swaps.
template <CompactScalar S>
Mor<S> realign(const Mor<S> &m, const Object &b) {
  const Mor<S> id = identity<S>(b);
  const Mor<S> open = tensor(tensor(cup<S>(b), id), id);                    // (q, a, r, s)
  const Mor<S> cross = tensor(tensor(id, id), swap<S>(b, b));              // (q, a, s, r)
  const Mor<S> apply = tensor(tensor(id, m.retyped(b * b, b * b)), id);    // (q, c, d, r)
  const Mor<S> close = tensor(tensor(id, id), cap<S>(b));                  // (q, c)
  return compose_all<S>({open, cross, apply, close, swap<S>(b, b)}).retyped(b * b, b * b);
}

/// The CPM state of h : A -> B, obtained by bending the input of h into an
/// ancilla: Kraus (h (x) id_A) o eta_A : I -> B (x) A.
template <CompactScalar S>
CpmMor<S> bent_state(const Mor<S> &h) {
  const Object &a = h.dom(), &b = h.cod();
  const Mor<S> bent = compose(tensor(h, identity<S>(a)), cup<S>(a));
  return CpmMor<S>(KrausMor<S>(bent, Object::unit(), b, a));
}

/// Verifies each rewrite as a matrix identity for f and for g:
///   state o state^dag = realign(doubled(h o h^dag))
///   state = (id (x) h o h^dag) o eta_B
/// and then the three equivalences linking equality of f o f^dag and g o g^dag
/// to equality of the CPM states.
template <CompactScalar S>
AxiomReport<S> replay_proposition_steps(const Mor<S> &f, const Mor<S> &g, double tol) {
  if (!composable(f.dom(), g.dom())) {
    throw DimensionMismatch("replay needs a common domain");
  }
  AxiomReport<S> r{"proposition-replay"};
  struct Pieces {
    Mor<S> state, square, positive, doubled;
  };
  auto steps = [&](const Mor<S> &h, const std::string &name) {
    const Object &b = h.cod();
    const CpmMor<S> st = bent_state(h);
    const Mor<S> square = compose(st.realized(), dagger(st.realized()));
    const Mor<S> positive = compose(h, dagger(h));
    const Mor<S> doubled = cpmform(pure(positive));
    detail::expect_equal(r, name + ": state o state^dag = realigned doubled " + name + " o " + name + "^dag", square,
                         realign(doubled, b), tol);
    const Mor<S> bent_positive = compose(tensor(identity<S>(b), positive), cup<S>(b));
    detail::expect_equal(r, name + ": state = bent " + name + " o " + name + "^dag",
                         st.realized().retyped(Object::unit(), b * b), bent_positive, tol);
    return Pieces{st.realized(), square, positive, doubled};
  };
  const Pieces pf = steps(f, "f");
  const Pieces pg = steps(g, "g");

  const double d_square = detail::distance(pf.square, pg.square);
  const double d_doubled = detail::distance(pf.doubled, pg.doubled);
  const double d_positive = detail::distance(pf.positive, pg.positive);
  const double d_state = detail::distance(pf.state, pg.state);
  detail::expect_iff<S>(r, "state squares agree <=> doubled positives agree", d_square, d_doubled, tol,
                        {{"f_square", pf.square}, {"g_square", pg.square}});
  detail::expect_iff<S>(r, "doubled positives agree <=> f o f^dag = g o g^dag", d_doubled, d_positive, tol,
                        {{"f_doubled", pf.doubled}, {"g_doubled", pg.doubled}});
  detail::expect_iff<S>(r, "f o f^dag = g o g^dag <=> states agree", d_positive, d_state, tol,
                        {{"f_positive", pf.positive}, {"g_positive", pg.positive}});
  return r;
}

// ---------------------------------------------------------------------------
// The comparison functor xi : CP(C) -> supercategory.

/// xi(k) = (id_B (x) T_C) o pure(f) for k with Kraus f : A -> B (x) C.
template <Scalar S>
KrausMor<S> xi(const EnvStructure<S> &env, const KrausMor<S> &k) {
  const KrausMor<S> ground = cp_tensor(cp_identity<S>(k.out()), env.discard(k.ancilla()));
  return cp_compose(ground, pure(k.kraus()));
}

/// Functor laws of xi on `samples` random triples, plus doubling on pairs from
/// the pure image (including phase-rotated pairs for complex scalars).
template <Scalar S>
AxiomReport<S> xi_iso_check(const EnvStructure<S> &env, Sampler<S> &sampler, std::size_t samples, double tol) {
  AxiomReport<S> r{"xi"};
  for (std::size_t t = 0; t < samples; ++t) {
    const KrausMor<S> k = sampler.kraus();
    const KrausMor<S> k2 = sampler.kraus(k.out(), sampler.object(), sampler.object());
    const KrausMor<S> k3 = sampler.kraus();
    detail::expect_equal(r, "xi(k) = k", cpform(xi(env, k)), cpform(k), tol);
    detail::expect_equal(r, "xi(k2 o k) = xi(k2) o xi(k)", cpform(xi(env, cp_compose(k2, k))),
                         cpform(cp_compose(xi(env, k2), xi(env, k))), tol);
    detail::expect_equal(r, "xi(k (x) k3) = xi(k) (x) xi(k3)", cpform(xi(env, cp_tensor(k, k3))),
                         cpform(cp_tensor(xi(env, k), xi(env, k3))), tol);
  }
  const KrausMor<S> one = cp_identity<S>(Object{2});
  detail::expect_equal(r, "xi(id) = id", cpform(xi(env, one)), cpform(one), tol);
  return r;
}

// ---------------------------------------------------------------------------
// Sampled suites, as run by the CLI and the acceptance tests.

/// Pairs pure(f), pure(g) from the doubled image: phase-rotated pairs on a
/// 12-point grid (complex only), equal pairs, and independent random pairs,
/// `samples` in total.
template <Scalar S>
AxiomReport<S> doubling_suite(Sampler<S> &sampler, std::size_t samples, double tol) {
  AxiomReport<S> r{"doubling"};
  std::size_t done = 0;
  if constexpr (std::is_same_v<S, Complex>) {
    for (int k = 0; k < 12 && done < samples; ++k, ++done) {
      const Object a = sampler.object(), b = sampler.object();
      const Mor<S> f = sampler.mor(a, b);
      const Complex phase = std::polar(1.0, 2.0 * std::numbers::pi * k / 12.0);
      r.merge(check_doubling_pair(pure(f), pure(scale(f, phase)), tol));
    }
  }
  while (done < samples) {
    const Object a = sampler.object(), b = sampler.object();
    const Mor<S> f = sampler.mor(a, b);
    const Mor<S> g = (done % 4 == 0) ? f : sampler.mor(a, b);
    r.merge(check_doubling_pair(pure(f), pure(g), tol));
    ++done;
  }
  return r;
}

/// Environment axiom (b) over random pairs, ancilla-permuted or
/// ancilla-unitary pairs g = (u (x) id) o f, and equal pairs.
template <Scalar S>
AxiomReport<S> env_b_suite(const EnvStructure<S> &env, Sampler<S> &sampler, std::size_t samples, double tol) {
  AxiomReport<S> r{"env-b"};
  for (std::size_t t = 0; t < samples; ++t) {
    const Object a = sampler.object(), c = sampler.object(), b = sampler.object();
    const Mor<S> f = sampler.mor(a, c * b);
    Mor<S> g = f;
    switch (t % 3) {
      case 0:
        g = sampler.mor(a, c * b);
        break;
      case 1: {
        Mor<S> u = identity<S>(c);
        if constexpr (std::is_same_v<S, Complex>) {
          u = random_unitary(sampler, c);
        } else {
          // A random cyclic shift is a unitary relation.
          const std::size_t n = c.total(), shift = sampler.dim(0, n - 1);
          u = Mor<S>::generate(c, c, [&](std::size_t i, std::size_t j) { return Bool(i == (j + shift) % n); });
        }
        g = compose(tensor(u, identity<S>(b)), f);
        break;
      }
      default:
        break;
    }
    r.merge(check_env_b_pair(env, f, g, c, b, tol));
  }
  return r;
}

template <CompactScalar S>
AxiomReport<S> replay_suite(Sampler<S> &sampler, std::size_t samples, double tol) {
  AxiomReport<S> r{"proposition-replay"};
  for (std::size_t t = 0; t < samples; ++t) {
    const Object a = sampler.object(), b = sampler.object();
    const Mor<S> f = sampler.mor(a, b);
    Mor<S> g = sampler.mor(a, b);
    if (t % 2 == 1) {
      // g = f o u has g o g^dag = f o f^dag.
      if constexpr (std::is_same_v<S, Complex>) {
        g = compose(f, random_unitary(sampler, a));
      } else {
        const std::size_t n = a.total(), shift = sampler.dim(0, n - 1);
        g = compose(f, Mor<S>::generate(a, a, [&](std::size_t i, std::size_t j) { return Bool(i == (j + shift) % n); }));
      }
    }
    r.merge(replay_proposition_steps(f, g, tol));
  }
  return r;
}

// Complex-only checks (they go through Choi matrices).

/// (c) for one CP morphism: extract a Kraus witness from the Choi matrix of k
/// and certify (id_B (x) T_anc) o pure(witness) = k.
AxiomReport<Complex> check_env_c(const EnvStructure<Complex> &env, const CKraus &k, double tol);

/// (c) starting from a Choi matrix; throws NotCompletelyPositive when no
/// Kraus witness exists.
AxiomReport<Complex> check_env_c_choi(const EnvStructure<Complex> &env, const ChoiMatrix &choi, double tol);

AxiomReport<Complex> env_c_suite(const EnvStructure<Complex> &env, Sampler<Complex> &sampler, std::size_t samples,
                                 double tol);

/// CPM states from phase-rotated Kraus morphisms e^{i theta} f (theta on a
/// 12-point grid) and from independent random Kraus morphisms.
AxiomReport<Complex> prep_state_suite(Sampler<Complex> &sampler, std::size_t samples, double tol);

/// f = [1], g = [-1] in FdHilb: f (x) f = g (x) g but f != g.
AxiomReport<Complex> doubling_base_counterexample(double tol);

/// f = [1], g = [-1] as raw FdHilb states: f f^dag = g g^dag but f != g.
AxiomReport<Complex> prep_state_base_counterexample(double tol);

}  // namespace cpkit
