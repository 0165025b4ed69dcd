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

// JSON morphism files:
//
//   {"semiring": "complex", "dom": [2], "cod": [2, 3],
//    "entries": [[re, im], ...]}          row-major, total(cod) x total(dom)
//
// Boolean files use "semiring": "bool" and 0/1 entries. An empty factor list
// is the unit object.

#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "cpkit/mor.hpp"

namespace cpkit {

using AnyMor = std::variant<CMor, RMor>;

/// Throws InvalidArgument on malformed JSON or fields, ShapeMismatch if the
/// entry count disagrees with dom and cod.
AnyMor parse_mor_file(std::string_view text);
AnyMor read_mor_file(const std::string &path);

std::string dump_mor_file(const CMor &m);
std::string dump_mor_file(const RMor &m);
void write_mor_file(const std::string &path, const AnyMor &m);

}  // namespace cpkit
