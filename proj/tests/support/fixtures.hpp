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

// Sample theories and small helpers shared by the tests.

#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "aspps/ground_theory.hpp"
#include "aspps/parser.hpp"

namespace aspps::testing {

inline constexpr std::string_view kColorRules = R"(% graph coloring
pred clr(vtx, color).
var vtx X, Y.
var color C.

vtx(X) -> 1 {clr(X,C) : color(C)} 1.
edge(X,Y), clr(X,C), clr(Y,C) -> .
)";

inline constexpr std::string_view kTriangleData = R"(vtx[1..3].
color[1..k].
edge(1,2).
edge(2,3).
edge(1,3).
)";

inline constexpr std::string_view kPigeonRules = R"(pred in(pigeon, hole).
var pigeon P.
var hole H.

pigeon(P) -> 1 {in(P,H) : hole(H)} 1.
hole(H) -> {in(P,H) : pigeon(P)} 1.
)";

inline constexpr std::string_view kPigeonData = "pigeon[1..4].\nhole[1..3].\n";

inline constexpr std::string_view kQueensRules = R"(pred q(row, col).
var row R, R1, R2.
var col C, C1, C2.

row(R) -> 1 {q(R,C) : col(C)} 1.
col(C) -> 1 {q(R,C) : row(R)} 1.
q(R1,C1), q(R2,C2), R1 < R2, R2 - R1 == abs(C2 - C1) -> .
)";

inline constexpr std::string_view kQueensData = "row[1..n].\ncol[1..n].\n";

// Parses and grounds in memory.
GroundTheory groundText(std::string_view rules, std::string_view data,
                        const ConstantMap& consts = {});

std::string readFile(const std::filesystem::path& p);
void writeFile(const std::filesystem::path& p, std::string_view text);

// Fresh directory that is also the working directory while the object lives.
class ScopedTempDir {
 public:
  ScopedTempDir();
  ~ScopedTempDir();
  ScopedTempDir(const ScopedTempDir&) = delete;
  ScopedTempDir& operator=(const ScopedTempDir&) = delete;
  const std::filesystem::path& path() const { return dir_; }

 private:
  std::filesystem::path dir_;
  std::filesystem::path previous_;
};

}  // namespace aspps::testing
