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

#include "cpkit/format.hpp"

#include <cstdio>

namespace cpkit {

std::string format_number(double x) {
  char buf[40];
  // Print negative zero as 0.
  std::snprintf(buf, sizeof buf, "%.17g", x == 0.0 ? 0.0 : x);
  return buf;
}

std::string format_scalar(Complex z) { return "(" + format_number(z.real()) + "," + format_number(z.imag()) + ")"; }

std::string format_scalar(Bool b) { return b.value ? "1" : "0"; }

}  // namespace cpkit
