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

#include "cpkit/morfile.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace cpkit {

namespace {

using nlohmann::json;

Object object_field(const json &j, const char *key) {
  if (!j.contains(key) || !j[key].is_array()) {
    throw InvalidArgument(std::string("mor file: '") + key + "' must be a list of factors");
  }
  std::vector<std::size_t> f;
  for (const json &d : j[key]) {
    if (!d.is_number_integer() || d.get<long long>() < 1) {
      throw InvalidArgument(std::string("mor file: '") + key + "' factors must be positive integers");
    }
    f.push_back(d.get<std::size_t>());
  }
  return Object(std::move(f));
}

json object_json(const Object &o) { return json(o.factors()); }

}  // namespace

AnyMor parse_mor_file(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error &e) {
    throw InvalidArgument(std::string("mor file: ") + e.what());
  }
  if (!j.is_object()) {
    throw InvalidArgument("mor file: expected a JSON object");
  }
  const Object dom = object_field(j, "dom");
  const Object cod = object_field(j, "cod");
  const std::string semiring = j.value("semiring", std::string("complex"));
  if (!j.contains("entries") || !j["entries"].is_array()) {
    throw InvalidArgument("mor file: 'entries' must be a list");
  }
  const json &entries = j["entries"];
  if (semiring == "complex") {
    std::vector<Complex> e;
    for (const json &x : entries) {
      if (x.is_number()) {
        e.emplace_back(x.get<double>(), 0.0);
      } else if (x.is_array() && x.size() == 2 && x[0].is_number() && x[1].is_number()) {
        e.emplace_back(x[0].get<double>(), x[1].get<double>());
      } else {
        throw InvalidArgument("mor file: complex entries must be [re, im]");
      }
    }
    return CMor(dom, cod, std::move(e));
  }
  if (semiring == "bool") {
    std::vector<Bool> e;
    for (const json &x : entries) {
      if (x.is_number_integer() && (x.get<int>() == 0 || x.get<int>() == 1)) {
        e.emplace_back(x.get<int>() == 1);
      } else if (x.is_boolean()) {
        e.emplace_back(x.get<bool>());
      } else {
        throw InvalidArgument("mor file: bool entries must be 0 or 1");
      }
    }
    return RMor(dom, cod, std::move(e));
  }
  throw InvalidArgument("mor file: unknown semiring '" + semiring + "'");
}

AnyMor read_mor_file(const std::string &path) {
  std::ifstream in(path);
  if (!in) {
    throw InvalidArgument("cannot open '" + path + "'");
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_mor_file(ss.str());
}

std::string dump_mor_file(const CMor &m) {
  json e = json::array();
  for (Complex z : m.entries()) {
    e.push_back({z.real(), z.imag()});
  }
  json j = {{"semiring", "complex"}, {"dom", object_json(m.dom())}, {"cod", object_json(m.cod())}, {"entries", e}};
  return j.dump() + "\n";
}

std::string dump_mor_file(const RMor &m) {
  json e = json::array();
  for (Bool b : m.entries()) {
    e.push_back(b.value ? 1 : 0);
  }
  json j = {{"semiring", "bool"}, {"dom", object_json(m.dom())}, {"cod", object_json(m.cod())}, {"entries", e}};
  return j.dump() + "\n";
}

void write_mor_file(const std::string &path, const AnyMor &m) {
  std::ofstream out(path);
  if (!out) {
    throw InvalidArgument("cannot write '" + path + "'");
  }
  std::visit([&](const auto &x) { out << dump_mor_file(x); }, m);
}

}  // namespace cpkit
