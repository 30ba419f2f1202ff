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

// Abstract syntax of typed theories: constants, terms, the four atom forms,
// clauses and preamble declarations.

#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace aspps {

// An integer or a symbolic name. Ordering puts every integer before every
// symbol; integers compare numerically and symbols lexicographically.
class Constant {
 public:
  Constant() : value_(std::int64_t{0}) {}
  Constant(std::int64_t v) : value_(v) {}  // NOLINT(google-explicit-constructor)
  static Constant symbol(std::string name) {
    Constant c;
    c.value_ = std::move(name);
    return c;
  }
  // Integer if `text` is a decimal literal, symbol otherwise.
  static Constant fromText(std::string_view text);

  bool isInt() const { return std::holds_alternative<std::int64_t>(value_); }
  std::int64_t intValue() const { return std::get<std::int64_t>(value_); }
  const std::string& name() const { return std::get<std::string>(value_); }

  std::string str() const;

  auto operator<=>(const Constant&) const = default;
  bool operator==(const Constant&) const = default;

 private:
  std::variant<std::int64_t, std::string> value_;
};

using Tuple = std::vector<Constant>;

std::string toString(const Tuple& t);

struct Variable {
  std::string name;
  auto operator<=>(const Variable&) const = default;
  bool operator==(const Variable&) const = default;
};

enum class ArithOp { Add, Sub, Mul, Div, Abs, Mod, Max, Min };

// Number of operands the operator takes.
int arity(ArithOp op);
std::string_view spelling(ArithOp op);
// Named functions (abs, mod, max, min); nullopt for other identifiers.
std::optional<ArithOp> functionByName(std::string_view name);

struct Term;

struct ArithExpr {
  ArithOp op;
  std::vector<Term> operands;
  bool operator==(const ArithExpr& other) const;
};

struct Term {
  std::variant<Constant, Variable, ArithExpr> node;

  static Term constant(Constant c) { return Term{std::move(c)}; }
  static Term var(std::string name) { return Term{Variable{std::move(name)}}; }
  static Term arith(ArithOp op, std::vector<Term> operands) {
    return Term{ArithExpr{op, std::move(operands)}};
  }

  bool isConstant() const { return std::holds_alternative<Constant>(node); }
  bool isVariable() const { return std::holds_alternative<Variable>(node); }
  bool isArith() const { return std::holds_alternative<ArithExpr>(node); }
  const Constant& asConstant() const { return std::get<Constant>(node); }
  const Variable& asVariable() const { return std::get<Variable>(node); }
  const ArithExpr& asArith() const { return std::get<ArithExpr>(node); }

  bool operator==(const Term&) const = default;
};

inline bool ArithExpr::operator==(const ArithExpr& other) const {
  return op == other.op && operands == other.operands;
}

std::string toString(const Term& t);

// Predefined comparison predicates `==`, `<=`, `>=`, `<`, `>`.
bool isComparison(std::string_view pred);

// Form 1: p(t). `pred` may name a program, data or predefined predicate.
struct PlainAtom {
  std::string pred;
  std::vector<Term> args;
  bool operator==(const PlainAtom&) const = default;
};

// Form 2: p(t,Y):dp(Y). `args` includes Y as its final element.
struct EAtom {
  std::string pred;
  std::vector<Term> args;
  std::string boundVar;
  std::string domainPred;
  bool operator==(const EAtom&) const = default;
};

// Cardinality bound; absent means the natural default (0 or set size).
using Bound = std::optional<Constant>;

// Form 3: m{p(t):d1(t1):...:dk(tk)}n.
struct CAtomSchema {
  Bound lo;
  PlainAtom member;
  std::vector<PlainAtom> conds;
  Bound hi;
  bool operator==(const CAtomSchema&) const = default;
};

// Form 4: m{p1(t),...,pk(t)}n.
struct CAtomList {
  Bound lo;
  std::vector<std::string> preds;
  std::vector<Term> args;
  Bound hi;
  bool operator==(const CAtomList&) const = default;
};

using Atom = std::variant<PlainAtom, EAtom, CAtomSchema, CAtomList>;

std::string toString(const Atom& a);

struct SourcePos {
  int line = 0;
  int column = 0;
};

// body -> head: the body is a conjunction, the head a disjunction.
struct Clause {
  std::vector<Atom> body;
  std::vector<Atom> head;
  SourcePos pos;

  // Position is not part of the structure.
  bool operator==(const Clause& o) const { return body == o.body && head == o.head; }
};

std::string toString(const Clause& c);

struct PredDecl {
  std::string name;
  std::vector<std::string> argTypes;
  std::optional<std::string> restriction;
  SourcePos pos;

  bool operator==(const PredDecl& o) const {
    return name == o.name && argTypes == o.argTypes && restriction == o.restriction;
  }
};

struct VarDecl {
  std::string typePred;
  std::vector<std::string> varNames;
  SourcePos pos;

  bool operator==(const VarDecl& o) const {
    return typePred == o.typePred && varNames == o.varNames;
  }
};

struct Program {
  std::vector<PredDecl> predDecls;
  std::vector<VarDecl> varDecls;
  std::vector<Clause> clauses;

  const PredDecl* findPred(std::string_view name) const;
  // Type predicate of a declared variable, or nullptr.
  const std::string* varType(std::string_view name) const;

  bool operator==(const Program&) const = default;
};

// Renders a program in rule-file syntax; parsing the output yields an equal
// Program.
std::string toString(const Program& p);

using Binding = std::map<std::string, Constant, std::less<>>;

// Replaces bound variables by their constants. Does not evaluate arithmetic.
Term applySubstitution(const Term& t, const Binding& binding);
PlainAtom applySubstitution(const PlainAtom& a, const Binding& binding);

// Variables of a term in order of first occurrence, appended to `out`
// without duplicates.
void collectVariables(const Term& t, std::vector<std::string>& out);
void collectVariables(const PlainAtom& a, std::vector<std::string>& out);

enum class AtomKind { Program, Data, Predefined, EAtom, CAtom };

std::string_view toString(AtomKind k);

// Classifies an atom against the program's declarations. When
// `dataPredicates` is given, a declared program predicate that also occurs in
// it is a declaration conflict and raises CheckError.
AtomKind atomKind(const Atom& a, const Program& prog,
                  const std::set<std::string, std::less<>>* dataPredicates = nullptr);

}  // namespace aspps
