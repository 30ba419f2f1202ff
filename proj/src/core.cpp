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

#include "aspps/core.hpp"

#include <charconv>

#include "aspps/error.hpp"

namespace aspps {

std::string Diagnostic::str() const {
  return file + ":" + std::to_string(line) + ":" + std::to_string(column) + ": " + message;
}

ParseError::ParseError(Diagnostic d) : Error(d.str()), diag_(std::move(d)) {}

namespace {

std::string joinDiagnostics(const std::vector<Diagnostic>& diags) {
  std::string out;
  for (const auto& d : diags) {
    if (!out.empty()) out += '\n';
    out += d.str();
  }
  return out;
}

}  // namespace

CheckError::CheckError(std::vector<Diagnostic> diags)
    : Error(joinDiagnostics(diags)), diags_(std::move(diags)) {}

FormatError::FormatError(int line, const std::string& message)
    : Error("line " + std::to_string(line) + ": " + message), line_(line) {}

Constant Constant::fromText(std::string_view text) {
  std::int64_t v = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (!text.empty()) {
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec == std::errc() && ptr == last) return Constant(v);
  }
  return symbol(std::string(text));
}

std::string Constant::str() const {
  return isInt() ? std::to_string(intValue()) : name();
}

std::string toString(const Tuple& t) {
  std::string out;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) out += ',';
    out += t[i].str();
  }
  return out;
}

int arity(ArithOp op) { return op == ArithOp::Abs ? 1 : 2; }

std::string_view spelling(ArithOp op) {
  switch (op) {
    case ArithOp::Add: return "+";
    case ArithOp::Sub: return "-";
    case ArithOp::Mul: return "*";
    case ArithOp::Div: return "/";
    case ArithOp::Abs: return "abs";
    case ArithOp::Mod: return "mod";
    case ArithOp::Max: return "max";
    case ArithOp::Min: return "min";
  }
  return "?";
}

std::optional<ArithOp> functionByName(std::string_view name) {
  if (name == "abs") return ArithOp::Abs;
  if (name == "mod") return ArithOp::Mod;
  if (name == "max") return ArithOp::Max;
  if (name == "min") return ArithOp::Min;
  return std::nullopt;
}

namespace {

bool isInfix(ArithOp op) {
  return op == ArithOp::Add || op == ArithOp::Sub || op == ArithOp::Mul || op == ArithOp::Div;
}

std::string joinTerms(const std::vector<Term>& terms) {
  std::string out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (i) out += ',';
    out += toString(terms[i]);
  }
  return out;
}

std::string callForm(std::string_view pred, const std::vector<Term>& args) {
  std::string out(pred);
  if (!args.empty()) out += "(" + joinTerms(args) + ")";
  return out;
}

std::string boundText(const Bound& b) { return b ? b->str() : std::string(); }

}  // namespace

std::string toString(const Term& t) {
  if (t.isConstant()) return t.asConstant().str();
  if (t.isVariable()) return t.asVariable().name;
  const auto& e = t.asArith();
  if (isInfix(e.op) && e.operands.size() == 2) {
    return "(" + toString(e.operands[0]) + std::string(spelling(e.op)) + toString(e.operands[1]) +
           ")";
  }
  return std::string(spelling(e.op)) + "(" + joinTerms(e.operands) + ")";
}

bool isComparison(std::string_view pred) {
  return pred == "==" || pred == "<=" || pred == ">=" || pred == "<" || pred == ">";
}

namespace {

std::string plainText(const PlainAtom& a) {
  if (isComparison(a.pred) && a.args.size() == 2) {
    return toString(a.args[0]) + " " + a.pred + " " + toString(a.args[1]);
  }
  return callForm(a.pred, a.args);
}

std::string braced(const Bound& lo, const std::string& inner, const Bound& hi) {
  std::string out;
  if (lo) out += boundText(lo) + " ";
  out += "{" + inner + "}";
  if (hi) out += " " + boundText(hi);
  return out;
}

}  // namespace

std::string toString(const Atom& a) {
  struct Visitor {
    std::string operator()(const PlainAtom& p) const { return plainText(p); }
    std::string operator()(const EAtom& e) const {
      return callForm(e.pred, e.args) + ":" + e.domainPred + "(" + e.boundVar + ")";
    }
    std::string operator()(const CAtomSchema& c) const {
      std::string inner = plainText(c.member);
      for (const auto& d : c.conds) inner += " : " + plainText(d);
      return braced(c.lo, inner, c.hi);
    }
    std::string operator()(const CAtomList& c) const {
      std::string inner;
      for (std::size_t i = 0; i < c.preds.size(); ++i) {
        if (i) inner += ", ";
        inner += callForm(c.preds[i], c.args);
      }
      return braced(c.lo, inner, c.hi);
    }
  };
  return std::visit(Visitor{}, a);
}

std::string toString(const Clause& c) {
  std::string out;
  for (std::size_t i = 0; i < c.body.size(); ++i) {
    if (i) out += ", ";
    out += toString(c.body[i]);
  }
  out += out.empty() ? "->" : " ->";
  for (std::size_t i = 0; i < c.head.size(); ++i) {
    out += i ? " | " : " ";
    out += toString(c.head[i]);
  }
  out += ".";
  return out;
}

const PredDecl* Program::findPred(std::string_view name) const {
  for (const auto& d : predDecls) {
    if (d.name == name) return &d;
  }
  return nullptr;
}

const std::string* Program::varType(std::string_view name) const {
  for (const auto& d : varDecls) {
    for (const auto& v : d.varNames) {
      if (v == name) return &d.typePred;
    }
  }
  return nullptr;
}

std::string toString(const Program& p) {
  std::string out;
  for (const auto& d : p.predDecls) {
    out += "pred " + d.name;
    if (!d.argTypes.empty()) {
      out += "(";
      for (std::size_t i = 0; i < d.argTypes.size(); ++i) {
        if (i) out += ",";
        out += d.argTypes[i];
      }
      out += ")";
    }
    if (d.restriction) out += ": " + *d.restriction;
    out += ".\n";
  }
  for (const auto& d : p.varDecls) {
    out += "var " + d.typePred + " ";
    for (std::size_t i = 0; i < d.varNames.size(); ++i) {
      if (i) out += ", ";
      out += d.varNames[i];
    }
    out += ".\n";
  }
  for (const auto& c : p.clauses) out += toString(c) + "\n";
  return out;
}

Term applySubstitution(const Term& t, const Binding& binding) {
  if (t.isVariable()) {
    auto it = binding.find(t.asVariable().name);
    return it == binding.end() ? t : Term::constant(it->second);
  }
  if (t.isArith()) {
    const auto& e = t.asArith();
    std::vector<Term> ops;
    ops.reserve(e.operands.size());
    for (const auto& o : e.operands) ops.push_back(applySubstitution(o, binding));
    return Term::arith(e.op, std::move(ops));
  }
  return t;
}

PlainAtom applySubstitution(const PlainAtom& a, const Binding& binding) {
  PlainAtom out{a.pred, {}};
  out.args.reserve(a.args.size());
  for (const auto& t : a.args) out.args.push_back(applySubstitution(t, binding));
  return out;
}

void collectVariables(const Term& t, std::vector<std::string>& out) {
  if (t.isVariable()) {
    const auto& n = t.asVariable().name;
    for (const auto& v : out) {
      if (v == n) return;
    }
    out.push_back(n);
  } else if (t.isArith()) {
    for (const auto& o : t.asArith().operands) collectVariables(o, out);
  }
}

void collectVariables(const PlainAtom& a, std::vector<std::string>& out) {
  for (const auto& t : a.args) collectVariables(t, out);
}

std::string_view toString(AtomKind k) {
  switch (k) {
    case AtomKind::Program: return "program";
    case AtomKind::Data: return "data";
    case AtomKind::Predefined: return "predefined";
    case AtomKind::EAtom: return "e-atom";
    case AtomKind::CAtom: return "c-atom";
  }
  return "?";
}

AtomKind atomKind(const Atom& a, const Program& prog,
                  const std::set<std::string, std::less<>>* dataPredicates) {
  if (std::holds_alternative<EAtom>(a)) return AtomKind::EAtom;
  if (!std::holds_alternative<PlainAtom>(a)) return AtomKind::CAtom;
  const auto& p = std::get<PlainAtom>(a);
  if (isComparison(p.pred)) return AtomKind::Predefined;
  if (prog.findPred(p.pred)) {
    if (dataPredicates && dataPredicates->count(p.pred)) {
      throw CheckError({Diagnostic{"", 0, 0,
                                   "predicate " + p.pred +
                                       " is declared as a program predicate but occurs in data"}});
    }
    return AtomKind::Program;
  }
  return AtomKind::Data;
}

}  // namespace aspps
