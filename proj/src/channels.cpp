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

#include "cpkit/channels.hpp"

#include <cmath>
#include <sstream>

#include "cpkit/eigen.hpp"

namespace cpkit {

namespace {

void require_square(const CMor &op, std::size_t dim, const char *what) {
  if (op.rows() != dim || op.cols() != dim) {
    throw ShapeMismatch(std::string(what) + " must be " + std::to_string(dim) + "x" + std::to_string(dim));
  }
}

void require_choi_shape(const ChoiMatrix &c) {
  const std::size_t n = c.in_dim * c.out_dim;
  if (c.in_dim == 0 || c.out_dim == 0 || c.matrix.rows() != n || c.matrix.cols() != n) {
    throw ShapeMismatch("Choi matrix must be " + std::to_string(n) + "x" + std::to_string(n));
  }
}

}  // namespace

std::vector<Complex> vec(const CMor &op) {
  const std::size_t d = op.rows();
  std::vector<Complex> v(d * op.cols());
  for (std::size_t j = 0; j < op.cols(); ++j) {
    for (std::size_t i = 0; i < d; ++i) {
      v[j * d + i] = op(i, j);
    }
  }
  return v;
}

CMor unvec(const std::vector<Complex> &v, std::size_t dim) {
  if (v.size() != dim * dim) {
    throw ShapeMismatch("vector length is not " + std::to_string(dim * dim));
  }
  return CMor::generate(Object{dim}, Object{dim}, [&](std::size_t i, std::size_t j) { return v[j * dim + i]; });
}

CMor apply_schrodinger(const CKraus &k, const CMor &rho) {
  const std::size_t ni = k.in().total(), no = k.out().total(), nc = k.ancilla().total();
  require_square(rho, ni, "input state");
  const CMor &f = k.kraus();
  // x[(b', c), a'] = sum_a f[(b', c), a] rho[a, a']
  const CMor x = compose(f, rho.retyped(k.in(), k.in()));
  std::vector<Complex> out(no * no, 0.0);
  for (std::size_t bp = 0; bp < no; ++bp) {
    for (std::size_t b = 0; b < no; ++b) {
      Complex s = 0.0;
      for (std::size_t c = 0; c < nc; ++c) {
        for (std::size_t ap = 0; ap < ni; ++ap) {
          s += x(bp * nc + c, ap) * std::conj(f(b * nc + c, ap));
        }
      }
      out[bp * no + b] = s;
    }
  }
  return CMor(k.out(), k.out(), std::move(out));
}

CMor apply_heisenberg(const CKraus &k, const CMor &x) {
  const std::size_t ni = k.in().total(), no = k.out().total(), nc = k.ancilla().total();
  require_square(x, no, "observable");
  const CMor &f = k.kraus();
  std::vector<Complex> out(ni * ni, 0.0);
  for (std::size_t a = 0; a < ni; ++a) {
    for (std::size_t ap = 0; ap < ni; ++ap) {
      Complex s = 0.0;
      for (std::size_t c = 0; c < nc; ++c) {
        for (std::size_t b = 0; b < no; ++b) {
          const Complex left = std::conj(f(b * nc + c, a));
          if (left == Complex(0.0)) {
            continue;
          }
          for (std::size_t bp = 0; bp < no; ++bp) {
            s += left * x(b, bp) * f(bp * nc + c, ap);
          }
        }
      }
      out[a * ni + ap] = s;
    }
  }
  return CMor(k.in(), k.in(), std::move(out));
}

CMor Superoperator::apply(const CMor &op) const {
  require_square(op, in_dim, "operator");
  const std::vector<Complex> v = vec(op);
  std::vector<Complex> w(out_dim * out_dim, 0.0);
  for (std::size_t r = 0; r < w.size(); ++r) {
    for (std::size_t c = 0; c < v.size(); ++c) {
      w[r] += action(r, c) * v[c];
    }
  }
  return unvec(w, out_dim);
}

namespace {

template <class Map>
Superoperator superoperator_from(std::size_t in_dim, std::size_t out_dim, Map &&map) {
  const Object in{in_dim * in_dim}, out{out_dim * out_dim};
  std::vector<std::vector<Complex>> columns;
  columns.reserve(in_dim * in_dim);
  for (std::size_t j = 0; j < in_dim; ++j) {
    for (std::size_t i = 0; i < in_dim; ++i) {
      CMor unit = CMor::generate(Object{in_dim}, Object{in_dim}, [&](std::size_t r, std::size_t c) {
        return (r == i && c == j) ? Complex(1.0) : Complex(0.0);
      });
      columns.push_back(vec(map(unit)));  // column index j * in_dim + i
    }
  }
  return {in_dim, out_dim,
          CMor::generate(in, out, [&](std::size_t r, std::size_t c) { return columns[c][r]; })};
}

}  // namespace

Superoperator schrodinger_of(const CKraus &k) {
  return superoperator_from(k.in().total(), k.out().total(),
                            [&](const CMor &rho) { return apply_schrodinger(k, rho.retyped(k.in(), k.in())); });
}

Superoperator heisenberg_of(const CKraus &k) {
  return superoperator_from(k.out().total(), k.in().total(),
                            [&](const CMor &x) { return apply_heisenberg(k, x.retyped(k.out(), k.out())); });
}

Superoperator compose(const Superoperator &g, const Superoperator &f) {
  if (g.in_dim != f.out_dim) {
    throw DimensionMismatch("superoperators do not compose: " + std::to_string(f.out_dim) + " vs " +
                            std::to_string(g.in_dim));
  }
  return {f.in_dim, g.out_dim, compose(g.action, f.action)};
}

ChoiMatrix choi_of_kraus(const CKraus &k) {
  const std::size_t ni = k.in().total(), no = k.out().total(), nc = k.ancilla().total();
  const CMor &f = k.kraus();
  // Choi[(i, b'), (j, b)] = sum_c f[(b', c), i] conj(f[(b, c), j])
  CMor m = CMor::generate(Object{ni, no}, Object{ni, no}, [&](std::size_t row, std::size_t col) {
    const std::size_t i = row / no, bp = row % no, j = col / no, b = col % no;
    Complex s = 0.0;
    for (std::size_t c = 0; c < nc; ++c) {
      s += f(bp * nc + c, i) * std::conj(f(b * nc + c, j));
    }
    return s;
  });
  return {ni, no, std::move(m)};
}

ChoiMatrix choi_of_superoperator(const Superoperator &s) {
  const std::size_t ni = s.in_dim, no = s.out_dim;
  CMor m = CMor::generate(Object{ni, no}, Object{ni, no}, [&](std::size_t row, std::size_t col) {
    const std::size_t i = row / no, bp = row % no, j = col / no, b = col % no;
    return s.action(b * no + bp, j * ni + i);
  });
  return {ni, no, std::move(m)};
}

CpCheck check_cp(const CMor &choi, double tol, double herm_tol) {
  if (choi.rows() != choi.cols()) {
    throw ShapeMismatch("Choi matrix must be square");
  }
  const double asym = max_abs_diff(choi, dagger(choi));
  if (asym > herm_tol) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "Choi matrix is not Hermitian: max |C - C^dag| = " << asym;
    throw NotHermitian(msg.str());
  }
  const HermitianEigen e = hermitian_eigen(choi);
  const double lo = e.values.empty() ? 0.0 : e.values.front();
  return {lo >= -tol, lo};
}

CpCheck check_cp(const ChoiMatrix &c, double tol, double herm_tol) {
  require_choi_shape(c);
  return check_cp(c.matrix, tol, herm_tol);
}

DilationResult kraus_from_choi(const ChoiMatrix &c, double tol) {
  require_choi_shape(c);
  const std::size_t ni = c.in_dim, no = c.out_dim;
  const CpCheck cp = check_cp(c, tol);
  if (!cp.completely_positive) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "Choi matrix has eigenvalue " << cp.min_eigenvalue << " below -" << tol;
    throw NotCompletelyPositive(msg.str());
  }
  const HermitianEigen e = hermitian_eigen(c.matrix);

  std::vector<std::size_t> kept;
  for (std::size_t k = e.values.size(); k-- > 0;) {  // largest first
    if (e.values[k] > tol) {
      kept.push_back(k);
    }
  }
  const std::size_t anc = std::max<std::size_t>(kept.size(), 1);

  std::vector<CMor> ops;
  std::vector<Complex> g(no * anc * ni, 0.0);
  for (std::size_t slot = 0; slot < kept.size(); ++slot) {
    const std::size_t k = kept[slot];
    const double w = std::sqrt(e.values[k]);
    // K[b', i] = sqrt(lambda) v[(i, b')]
    CMor op = CMor::generate(Object{ni}, Object{no},
                             [&](std::size_t bp, std::size_t i) { return w * e.vectors(i * no + bp, k); });
    for (std::size_t bp = 0; bp < no; ++bp) {
      for (std::size_t i = 0; i < ni; ++i) {
        g[(bp * anc + slot) * ni + i] = op(bp, i);
      }
    }
    ops.push_back(std::move(op));
  }
  if (ops.empty()) {
    ops.push_back(CMor::zero(Object{ni}, Object{no}));
  }

  CKraus dilation(CMor(Object{ni}, Object{no, anc}, std::move(g)), Object{ni}, Object{no}, Object{anc});
  const double err = max_abs_diff(choi_of_kraus(dilation).matrix, c.matrix);
  return {anc, std::move(dilation), std::move(ops), err};
}

ChoiMatrix transpose_map_choi(std::size_t dim) {
  // Phi(E_ij) = E_ji, so Choi[(i, b'), (j, b)] = [b' == j][b == i].
  return {dim, dim, swap<Complex>(Object{dim}, Object{dim})};
}

ChoiMatrix depolarizing_choi(std::size_t dim) {
  const Object d2{dim, dim};
  return {dim, dim, scale(identity<Complex>(d2), Complex(1.0 / static_cast<double>(dim)))};
}

Complex trace_pairing(const CMor &a, const CMor &b) {
  if (a.rows() != b.cols() || a.cols() != b.rows()) {
    throw ShapeMismatch("trace pairing needs compatible shapes");
  }
  Complex s = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      s += a(i, j) * b(j, i);
    }
  }
  return s;
}

}  // namespace cpkit
