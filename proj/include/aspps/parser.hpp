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

// Tokenizer and recursive-descent parsers for data files and rule files.
//
// Data files hold one ground atom `p(c1,...,cn).` or one range `p[m..n].` per
// statement. Rule files hold `pred` and `var` declarations followed by
// clauses `A1, ..., Am -> B1 | ... | Bn.` whose atoms take one of four forms:
//
//   p(t)                         plain atom, or a comparison `t1 <= t2`
//   p(t,Y):dp(Y)                 e-atom
//   m {p(t) : d1(t1) : ...} n    c-atom over a schema
//   m {p1(t), ..., pk(t)} n      c-atom over a list of predicates
//
// Identifiers declared by `var` are variables. Any other identifier starting
// with an upper-case letter is taken to be an undeclared variable and
// rejected; the remaining identifiers are symbolic constants.

#pragma once

#include <compare>
#include <cstdint>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "aspps/core.hpp"
#include "aspps/error.hpp"

namespace aspps {

using ParseDiagnostic = Diagnostic;

// Command-line constants, in the order they were given.
class ConstantMap {
 public:
  ConstantMap() = default;
  ConstantMap(std::initializer_list<std::pair<std::string, std::string>> init);

  // Throws std::invalid_argument if `name` is already set.
  void set(std::string name, std::string value);
  const std::string* find(std::string_view name) const;
  const std::vector<std::pair<std::string, std::string>>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }

 private:
  std::vector<std::pair<std::string, std::string>> entries_;
};

enum class TokenKind { Ident, Int, Punct };

struct Token {
  TokenKind kind;
  std::string text;
  // Position in the original text, before constant substitution.
  int line = 0;
  int column = 0;

  bool is(std::string_view punct) const { return kind == TokenKind::Punct && text == punct; }
};

// Strips comments and whitespace and substitutes constants. Every statement
// must end with a period.
std::vector<Token> tokenize(std::string_view text, const ConstantMap& consts,
                            std::string_view file = "<input>");

struct DataAtom {
  std::string pred;
  Tuple args;

  auto operator<=>(const DataAtom&) const = default;
  bool operator==(const DataAtom&) const = default;
};

std::string toString(const DataAtom& a);

// {p(m), p(m+1), ..., p(n)}. Throws Error when m > n.
std::set<DataAtom> expandRange(std::string_view pred, std::int64_t m, std::int64_t n);

std::set<DataAtom> parseDataFile(std::string_view text, const ConstantMap& consts,
                                 std::string_view file = "<input>");

Program parseRuleFile(std::string_view text, const ConstantMap& consts,
                      std::string_view file = "<input>");

// True for a letter followed by letters, digits and underscores.
bool isIdentifier(std::string_view s);

}  // namespace aspps
