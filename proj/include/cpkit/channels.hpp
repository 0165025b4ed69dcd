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

// Finite-dimensional quantum operations. A Kraus morphism f : H -> K (x) C
// acts in the Schrodinger picture as rho |-> Tr_C(f rho f^dag) and in the
// Heisenberg picture as x |-> f^dag (x (x) id_C) f.
//
// Operators are vectorized column-major: entry (i, j) of a d x d operator sits
// at index j * d + i.

#pragma once

#include <cstddef>
#include <vector>

#include "cpkit/cp.hpp"

namespace cpkit {

inline constexpr double kDefaultKrausTol = 1e-10;
inline constexpr double kHermitianTol = 1e-9;

/// Linear map on operators as an (out_dim^2) x (in_dim^2) matrix over
/// column-major vectorizations.
struct Superoperator {
  std::size_t in_dim;
  std::size_t out_dim;
  CMor action;

  /// Applies the map to an in_dim x in_dim operator.
  CMor apply(const CMor &op) const;
};

/// Block (i, j), of size out_dim x out_dim, is Phi(E_ij).
struct ChoiMatrix {
  std::size_t in_dim;
  std::size_t out_dim;
  CMor matrix;
};

struct CpCheck {
  bool completely_positive;
  double min_eigenvalue;
};

/// Kraus form of a completely positive map: g : in -> out (x) ancilla with
/// the map rho |-> Tr_anc(g rho g^dag); kraus_ops[k] is the k-th ancilla slice.
struct DilationResult {
  std::size_t ancilla_dim;
  CKraus dilation;
  std::vector<CMor> kraus_ops;
  /// Max-abs distance between the input Choi matrix and the Choi matrix of
  /// the reconstruction.
  double reconstruction_error;
};

/// Column-major vectorization of a square operator, as a column vector.
std::vector<Complex> vec(const CMor &op);
CMor unvec(const std::vector<Complex> &v, std::size_t dim);

/// Tr_C(f rho f^dag), by explicit summation over the ancilla index.
CMor apply_schrodinger(const CKraus &k, const CMor &rho);
/// f^dag (x (x) id_C) f.
CMor apply_heisenberg(const CKraus &k, const CMor &x);

Superoperator schrodinger_of(const CKraus &k);
Superoperator heisenberg_of(const CKraus &k);

/// g o f as superoperators (matrix product of the actions).
Superoperator compose(const Superoperator &g, const Superoperator &f);

ChoiMatrix choi_of_kraus(const CKraus &k);
ChoiMatrix choi_of_superoperator(const Superoperator &s);

/// Complete positivity through the Choi criterion: PSD up to -tol.
/// Throws NotHermitian when max|C - C^dag| exceeds herm_tol.
CpCheck check_cp(const ChoiMatrix &c, double tol, double herm_tol = kHermitianTol);
CpCheck check_cp(const CMor &choi, double tol, double herm_tol = kHermitianTol);

/// Eigendecomposes the Choi matrix and folds each eigenpair with eigenvalue
/// > tol into a Kraus operator sqrt(lambda) unvec(v). Throws
/// NotCompletelyPositive for an eigenvalue below -tol.
DilationResult kraus_from_choi(const ChoiMatrix &c, double tol = kDefaultKrausTol);

/// The transpose map on dim x dim operators; not completely positive for
/// dim >= 2. Its Choi matrix is swap(dim, dim).
ChoiMatrix transpose_map_choi(std::size_t dim);

/// The Choi matrix of the completely depolarizing channel rho |-> Tr(rho) id / dim.
ChoiMatrix depolarizing_choi(std::size_t dim);

/// Tr(a b) for square operators of equal size.
Complex trace_pairing(const CMor &a, const CMor &b);

}  // namespace cpkit
