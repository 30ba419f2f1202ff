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

// The `.tdc` ground theory format:
//
//   tdc 1
//   atoms N
//   <id> <text>                               N lines, ids 1..N
//   cards C
//   <id> <lo> <hi> <k> <m1> ... <mk>          C lines, ids N+1..N+C, hi -1 = unbounded
//   clauses M
//   <n> <lit1> ... <litn>                     M lines, signed ids, n = 0 is the empty clause
//
// Fields are separated by one space and every line ends with '\n'.

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "aspps/ground_theory.hpp"

namespace aspps {

inline constexpr int kTdcVersion = 1;

std::string writeTdc(const GroundTheory& gt);

// Inverse of writeTdc. Throws FormatError with the offending line number.
GroundTheory readTdc(std::string_view text);

// One clause per line, `-` for negation, cards as `lo {a1, a2} hi`, the
// empty clause as FALSE.
std::string printTheory(const GroundTheory& gt);

// Truth values indexed by atom id; index 0 is unused.
using Assignment = std::vector<bool>;

// True iff lo <= count <= hi holds for `card` under `assignment`.
bool cardHolds(const CardConstruct& card, const Assignment& assignment);

// True iff every clause has a true literal.
bool checkModel(const GroundTheory& gt, const Assignment& assignment);

}  // namespace aspps
