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

// Line-oriented key=value output. Numbers carry 17 significant digits.

#pragma once

#include <ostream>
#include <string>

#include "cpkit/mor.hpp"

namespace cpkit {

/// printf("%.17g").
std::string format_number(double x);

/// "(re,im)" for complex scalars, "0"/"1" for booleans.
std::string format_scalar(Complex z);
std::string format_scalar(Bool b);

/// Writes semiring, dom, cod, rows, cols, then an "entries" block with one
/// line per row, closed by "end".
template <Scalar S>
void write_mor(std::ostream &out, const Mor<S> &m) {
  out << "semiring=" << ScalarTraits<S>::name << '\n';
  out << "dom=" << m.dom().str() << '\n';
  out << "cod=" << m.cod().str() << '\n';
  out << "rows=" << m.rows() << '\n';
  out << "cols=" << m.cols() << '\n';
  out << "entries\n";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) {
        out << ' ';
      }
      out << format_scalar(m(r, c));
    }
    out << '\n';
  }
  out << "end\n";
}

}  // namespace cpkit
