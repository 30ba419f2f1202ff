// Copyright 2026 The aspps Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "fixtures.hpp"

#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

#include "aspps/database.hpp"
#include "aspps/grounder.hpp"

namespace aspps::testing {

GroundTheory groundText(std::string_view rules, std::string_view data,
                        const ConstantMap& consts) {
  DataDatabase db = buildDatabase(parseDataFile(data, consts, "data"));
  Program prog = parseRuleFile(rules, consts, "rules");
  return groundTheory(prog, db, "rules");
}

std::string readFile(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + p.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void writeFile(const std::filesystem::path& p, std::string_view text) {
  std::ofstream out(p, std::ios::binary);
  out << text;
}

ScopedTempDir::ScopedTempDir() : previous_(std::filesystem::current_path()) {
  std::random_device rd;
  const auto base = std::filesystem::temp_directory_path();
  do {
    dir_ = base / ("aspps-test-" + std::to_string(rd()));
  } while (!std::filesystem::create_directory(dir_));
  std::filesystem::current_path(dir_);
}

ScopedTempDir::~ScopedTempDir() {
  std::error_code ec;
  std::filesystem::current_path(previous_, ec);
  std::filesystem::remove_all(dir_, ec);
}

}  // namespace aspps::testing
