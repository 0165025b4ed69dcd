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

// Golden corpus: tests/golden/NAME.cps is run as `cpkit eval --script
// NAME.cps` plus the whitespace-separated arguments in NAME.args, if present.
// "@GOLDEN@" in NAME.args expands to the corpus directory. NAME.out holds
// stdout, then stderr, then a final "exit=N" line.

#pragma once

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cpkit/cli.hpp"

namespace cpkit::golden {

struct Case {
  std::string name;
  std::string expected;
  std::string actual;
  int exit_code = 0;
};

inline std::string slurp(const std::filesystem::path &p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::vector<std::string> case_args(const std::filesystem::path &dir, const std::string &name) {
  std::vector<std::string> args{"eval", "--script", (dir / (name + ".cps")).string()};
  const auto extra = dir / (name + ".args");
  if (std::filesystem::exists(extra)) {
    std::istringstream words(slurp(extra));
    for (std::string w; words >> w;) {
      for (auto at = w.find("@GOLDEN@"); at != std::string::npos; at = w.find("@GOLDEN@")) {
        w.replace(at, 8, dir.string());
      }
      args.push_back(w);
    }
  }
  return args;
}

inline Case run_case(const std::filesystem::path &dir, const std::string &name) {
  std::ostringstream out, err;
  Case c{name, slurp(dir / (name + ".out")), "", 0};
  c.exit_code = run_cli(case_args(dir, name), out, err);
  c.actual = out.str() + err.str() + "exit=" + std::to_string(c.exit_code) + "\n";
  return c;
}

inline std::vector<std::string> case_names(const std::filesystem::path &dir) {
  std::vector<std::string> names;
  for (const auto &entry : std::filesystem::directory_iterator(dir)) {
    if (entry.path().extension() == ".cps") {
      names.push_back(entry.path().stem().string());
    }
  }
  std::sort(names.begin(), names.end());
  return names;
}

}  // namespace cpkit::golden
