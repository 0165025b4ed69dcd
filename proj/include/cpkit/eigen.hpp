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

#include <vector>

#include "cpkit/mor.hpp"

namespace cpkit {

struct HermitianEigen {
  /// Ascending.
  std::vector<double> values;
  /// Column k is the unit eigenvector for values[k].
  CMor vectors;
};

/// Cyclic complex Jacobi eigensolver for small dense Hermitian matrices.
/// Only the Hermitian part (m + m^dag) / 2 is used. Works on a private copy.
HermitianEigen hermitian_eigen(const CMor &m);

/// max_k || m v_k - lambda_k v_k ||_2.
double eigen_residual(const CMor &m, const HermitianEigen &e);

}  // namespace cpkit
