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

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "aspps/core.hpp"

namespace aspps {

using Lit = std::int32_t;

// Upper bound sentinel for cardinality constructs without one.
inline constexpr std::int64_t kUnbounded = -1;

struct GroundAtom {
  Lit id = 0;
  std::string pred;
  Tuple args;
  // Canonical rendering: `pred(a1,...,an)`, or `pred` when nullary.
  std::string text;

  bool operator==(const GroundAtom&) const = default;
};

std::string atomText(const std::string& pred, const Tuple& args);

struct CardConstruct {
  Lit id = 0;
  std::int64_t lo = 0;
  std::int64_t hi = kUnbounded;
  // Atom ids, ascending.
  std::vector<Lit> members;

  bool operator==(const CardConstruct&) const = default;
};

// A disjunction of signed atom or card ids. Empty means false.
struct GroundClause {
  std::vector<Lit> literals;

  bool operator==(const GroundClause&) const = default;
};

// Atoms are numbered 1..N and cards N+1..N+C.
struct GroundTheory {
  std::vector<GroundAtom> atoms;
  std::vector<CardConstruct> cards;
  std::vector<GroundClause> clauses;

  Lit numAtoms() const { return static_cast<Lit>(atoms.size()); }
  Lit numVars() const { return static_cast<Lit>(atoms.size() + cards.size()); }
  bool isCard(Lit id) const { return id > numAtoms(); }
  const GroundAtom& atom(Lit id) const { return atoms[static_cast<std::size_t>(id - 1)]; }
  const CardConstruct& card(Lit id) const {
    return cards[static_cast<std::size_t>(id - numAtoms() - 1)];
  }
  bool hasEmptyClause() const;

  bool operator==(const GroundTheory&) const = default;
};

}  // namespace aspps
