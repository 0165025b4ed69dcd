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

#include "cpkit/axioms.hpp"

namespace cpkit {

namespace {

CKraus ground_witness(const EnvStructure<Complex> &env, const DilationResult &d) {
  const CKraus &w = d.dilation;
  const CKraus ground = cp_tensor(cp_identity<Complex>(w.out()), env.discard(w.ancilla()));
  return cp_compose(ground, pure(w.kraus()));
}

CMor scalar_mor(Complex z) { return CMor(Object{1}, Object{1}, {z}); }

}  // namespace

AxiomReport<Complex> check_env_c(const EnvStructure<Complex> &env, const CKraus &k, double tol) {
  AxiomReport<Complex> r{"env-c"};
  const DilationResult d = kraus_from_choi(choi_of_kraus(k));
  detail::expect_equal(r, "discarded Kraus witness = k", cpform(ground_witness(env, d)), cpform(k), tol);
  return r;
}

AxiomReport<Complex> check_env_c_choi(const EnvStructure<Complex> &env, const ChoiMatrix &choi, double tol) {
  AxiomReport<Complex> r{"env-c"};
  const DilationResult d = kraus_from_choi(choi);
  detail::expect_equal(r, "Choi of discarded Kraus witness = input Choi", choi_of_kraus(ground_witness(env, d)).matrix,
                       choi.matrix, tol);
  return r;
}

AxiomReport<Complex> env_c_suite(const EnvStructure<Complex> &env, Sampler<Complex> &sampler, std::size_t samples,
                                 double tol) {
  AxiomReport<Complex> r{"env-c"};
  for (std::size_t t = 0; t < samples; ++t) {
    r.merge(check_env_c(env, sampler.kraus(), tol));
  }
  return r;
}

AxiomReport<Complex> prep_state_suite(Sampler<Complex> &sampler, std::size_t samples, double tol) {
  AxiomReport<Complex> r{"prep-state"};
  for (std::size_t t = 0; t < samples; ++t) {
    const Object b = sampler.object(), c = sampler.object();
    const CMor f = sampler.mor(Object::unit(), b * c);
    const CpmMor<Complex> phi(CKraus(f, Object::unit(), b, c));
    if (t < 12) {
      const Complex phase = std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(t) / 12.0);
      r.merge(check_prep_state_pair(phi, CpmMor<Complex>(CKraus(scale(f, phase), Object::unit(), b, c)), tol));
    } else {
      const CMor g = sampler.mor(Object::unit(), b * c);
      r.merge(check_prep_state_pair(phi, CpmMor<Complex>(CKraus(g, Object::unit(), b, c)), tol));
    }
  }
  return r;
}

AxiomReport<Complex> doubling_base_counterexample(double tol) {
  return check_doubling_base(scalar_mor(1.0), scalar_mor(-1.0), tol);
}

AxiomReport<Complex> prep_state_base_counterexample(double tol) {
  return check_prep_state_base(scalar_mor(1.0), scalar_mor(-1.0), tol);
}

}  // namespace cpkit
