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

// Grounding: type checking, instantiation over typed variable domains,
// evaluation of data and predefined atoms, and compilation of e-atoms and
// c-atoms into cardinality constructs.

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "aspps/core.hpp"
#include "aspps/database.hpp"
#include "aspps/error.hpp"
#include "aspps/ground_theory.hpp"
#include "aspps/parser.hpp"

namespace aspps {

// Every declaration, arity and typing violation in `prog`; empty on success.
std::vector<Diagnostic> checkProgram(const Program& prog, const DataDatabase& db,
                                     std::string_view file = "<rules>");

// Integer value of a term. `/` truncates toward zero and mod(a,b) is
// a - b*(a/b). Throws GroundError on symbols, division by zero, overflow or
// unbound variables.
std::int64_t evalArith(const Term& t, const Binding& binding);

// Like evalArith but lets a bare symbolic constant through unchanged.
Constant evalTerm(const Term& t, const Binding& binding);

// Comparison atoms. Symbols support `==` only.
bool evalPredefined(const PlainAtom& a, const Binding& binding);

// Outcome of resolving one atom instance: a truth constant, or a reference
// to an interned atom or card.
struct Resolved {
  enum class Kind { False, True, Atom, Card };
  Kind kind = Kind::False;
  Lit id = 0;

  static Resolved constant(bool v) { return {v ? Kind::True : Kind::False, 0}; }
  bool isConstant() const { return kind == Kind::False || kind == Kind::True; }
  bool operator==(const Resolved&) const = default;
};

// Instantiates a checked program clause by clause. Atom and card ids handed
// out before finish() are provisional: atoms count from 1 in interning order
// and cards from kCardBase. finish() keeps only what the emitted clauses
// reference and renumbers densely.
class Grounder {
 public:
  static constexpr Lit kCardBase = 1 << 30;

  Grounder(const Program& prog, const DataDatabase& db);

  // Interned id, or nullopt when the instance falls outside the declared
  // argument types or the restriction predicate.
  std::optional<Lit> resolveProgramAtom(const PlainAtom& a, const Binding& binding);
  Resolved instantiateEAtom(const EAtom& a, const Binding& binding);
  // `a` must hold a CAtomSchema or a CAtomList.
  Resolved instantiateCAtom(const Atom& a, const Binding& binding);
  // nullopt when the instance is satisfied; an empty clause when it is
  // falsified outright.
  std::optional<GroundClause> groundClause(const Clause& c, const Binding& binding);

  // Grounds every clause over all bindings of its global variables.
  void groundAll();
  GroundTheory finish() const;

  const GroundAtom& provisionalAtom(Lit id) const { return atoms_[static_cast<std::size_t>(id - 1)]; }
  const CardConstruct& provisionalCard(Lit id) const {
    return cards_[static_cast<std::size_t>(id - kCardBase)];
  }

  // Global variables of a clause, in order of first occurrence: everything
  // except e-atom bound variables and variables confined to one c-atom schema.
  static std::vector<std::string> globalVariables(const Clause& c);

 private:
  Resolved resolve(const Atom& a, const Binding& binding);
  Lit internCard(std::int64_t lo, std::int64_t hi, std::vector<Lit> members);
  Resolved foldCard(std::int64_t lo, std::int64_t hi, std::vector<Lit> members);
  std::vector<Constant> domainOf(const std::string& var) const;

  const Program& prog_;
  const DataDatabase& db_;
  std::vector<GroundAtom> atoms_;
  std::map<std::pair<std::string, Tuple>, Lit> atomIds_;
  std::vector<CardConstruct> cards_;
  std::map<std::tuple<std::int64_t, std::int64_t, std::vector<Lit>>, Lit> cardIds_;
  std::vector<GroundClause> clauses_;
};

// checkProgram followed by grounding; throws CheckError on any violation.
GroundTheory groundTheory(const Program& prog, const DataDatabase& db,
                          std::string_view file = "<rules>");

// `name=value` for each constant, then rule and data file base names, joined
// by '-', with the `.tdc` extension.
std::string outputName(const ConstantMap& consts, std::string_view ruleFile,
                       std::span<const std::string> dataFiles);

}  // namespace aspps
