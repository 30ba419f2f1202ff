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

#include "aspps/parser.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <stdexcept>

namespace aspps {

ConstantMap::ConstantMap(std::initializer_list<std::pair<std::string, std::string>> init) {
  for (const auto& [k, v] : init) set(k, v);
}

void ConstantMap::set(std::string name, std::string value) {
  if (find(name)) throw std::invalid_argument("constant " + name + " given twice");
  entries_.emplace_back(std::move(name), std::move(value));
}

const std::string* ConstantMap::find(std::string_view name) const {
  for (const auto& [k, v] : entries_) {
    if (k == name) return &v;
  }
  return nullptr;
}

bool isIdentifier(std::string_view s) {
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
  for (char c : s) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  }
  return true;
}

namespace {

bool isIntLiteral(std::string_view s) {
  if (!s.empty() && s[0] == '-') s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

std::optional<std::int64_t> parseInt(std::string_view s) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

[[noreturn]] void fail(std::string_view file, int line, int col, std::string msg) {
  throw ParseError(Diagnostic{std::string(file), line, col, std::move(msg)});
}

}  // namespace

std::vector<Token> tokenize(std::string_view text, const ConstantMap& consts,
                            std::string_view file) {
  static constexpr std::string_view kTwoChar[] = {"->", "..", "==", "<=", ">="};
  static constexpr std::string_view kOneChar = "(),.:|{}[]+-*/<>";
  static constexpr std::string_view kArrow = "\xE2\x86\x92";  // U+2192

  std::vector<Token> out;
  int line = 1;
  int col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    i += n;
    col += static_cast<int>(n);
  };

  while (i < text.size()) {
    char c = text[i];
    if (c == '\n') {
      ++i;
      ++line;
      col = 1;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (c == '%') {
      while (i < text.size() && text[i] != '\n') ++i;
      continue;
    }
    const int startCol = col;
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) {
        ++j;
      }
      std::string word(text.substr(i, j - i));
      advance(j - i);
      if (const std::string* value = consts.find(word)) {
        if (isIntLiteral(*value)) {
          if (!parseInt(*value)) fail(file, line, startCol, "constant " + word + " is out of range");
          out.push_back({TokenKind::Int, *value, line, startCol});
        } else if (isIdentifier(*value)) {
          out.push_back({TokenKind::Ident, *value, line, startCol});
        } else {
          fail(file, line, startCol, "constant " + word + " has invalid value '" + *value + "'");
        }
      } else {
        out.push_back({TokenKind::Ident, std::move(word), line, startCol});
      }
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      std::string digits(text.substr(i, j - i));
      if (j < text.size() && (std::isalpha(static_cast<unsigned char>(text[j])) || text[j] == '_')) {
        fail(file, line, startCol, "identifiers must start with a letter");
      }
      if (!parseInt(digits)) fail(file, line, startCol, "integer literal out of range");
      advance(j - i);
      out.push_back({TokenKind::Int, std::move(digits), line, startCol});
      continue;
    }
    if (text.substr(i, kArrow.size()) == kArrow) {
      advance(kArrow.size());
      out.push_back({TokenKind::Punct, "->", line, startCol});
      continue;
    }
    bool matched = false;
    for (auto two : kTwoChar) {
      if (text.substr(i, 2) == two) {
        advance(2);
        out.push_back({TokenKind::Punct, std::string(two), line, startCol});
        matched = true;
        break;
      }
    }
    if (matched) continue;
    if (kOneChar.find(c) != std::string_view::npos) {
      advance(1);
      out.push_back({TokenKind::Punct, std::string(1, c), line, startCol});
      continue;
    }
    fail(file, line, startCol, std::string("illegal character '") + c + "'");
  }
  if (!out.empty() && !out.back().is(".")) {
    fail(file, out.back().line, out.back().column, "unterminated statement at end of file");
  }
  return out;
}

std::string toString(const DataAtom& a) {
  return a.args.empty() ? a.pred : a.pred + "(" + toString(a.args) + ")";
}

namespace {

// Upper bound on atoms produced by a single range statement.
constexpr std::int64_t kMaxRange = 10'000'000;

bool isKeyword(std::string_view s) { return s == "pred" || s == "var"; }

bool looksLikeVariable(std::string_view s) {
  return !s.empty() && std::isupper(static_cast<unsigned char>(s[0]));
}

class TokenCursor {
 public:
  TokenCursor(std::vector<Token> toks, std::string_view file)
      : toks_(std::move(toks)), file_(file) {}

  bool atEnd() const { return pos_ >= toks_.size(); }
  const Token& peek(std::size_t ahead = 0) const {
    static const Token kEnd{TokenKind::Punct, "<eof>", 0, 0};
    return pos_ + ahead < toks_.size() ? toks_[pos_ + ahead] : kEnd;
  }
  const Token& next() {
    const Token& t = peek();
    if (!atEnd()) ++pos_;
    return t;
  }
  bool accept(std::string_view punct) {
    if (peek().is(punct)) {
      ++pos_;
      return true;
    }
    return false;
  }
  const Token& expect(std::string_view punct) {
    if (!peek().is(punct)) error(peek(), "expected '" + std::string(punct) + "'");
    return next();
  }
  const Token& expectIdent(std::string_view what) {
    if (peek().kind != TokenKind::Ident) error(peek(), "expected " + std::string(what));
    return next();
  }

  [[noreturn]] void error(const Token& at, std::string msg) const {
    const Token& t = at.line ? at : lastReal();
    std::string found = at.line ? " near '" + at.text + "'" : " at end of statement";
    fail(file_, t.line, t.column, std::move(msg) + found);
  }
  [[noreturn]] void errorPlain(const Token& at, std::string msg) const {
    fail(file_, at.line, at.column, std::move(msg));
  }

  std::string_view file() const { return file_; }

 private:
  const Token& lastReal() const { return toks_.empty() ? peek() : toks_.back(); }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::string file_;
};

Constant dataConstant(TokenCursor& in) {
  const Token& t = in.peek();
  if (t.is("-") && in.peek(1).kind == TokenKind::Int) {
    in.next();
    const Token& n = in.next();
    return Constant(-*parseInt(n.text));
  }
  if (t.kind == TokenKind::Int) {
    in.next();
    return Constant(*parseInt(t.text));
  }
  if (t.kind == TokenKind::Ident) {
    if (looksLikeVariable(t.text)) in.errorPlain(t, "variable " + t.text + " in a data file");
    in.next();
    return Constant::symbol(t.text);
  }
  in.error(t, "expected a constant");
}

std::int64_t rangeBound(TokenCursor& in) {
  const Token& t = in.peek();
  if (t.kind == TokenKind::Ident) {
    in.errorPlain(t, "range bound " + t.text + " is not an integer");
  }
  if (t.is("-") || (t.kind == TokenKind::Int && t.text[0] == '-')) {
    in.errorPlain(t, "range bound must be non-negative");
  }
  if (t.kind != TokenKind::Int) in.error(t, "expected an integer range bound");
  in.next();
  return *parseInt(t.text);
}

}  // namespace

std::set<DataAtom> expandRange(std::string_view pred, std::int64_t m, std::int64_t n) {
  if (m > n) {
    throw Error("empty range " + std::string(pred) + "[" + std::to_string(m) + ".." +
                std::to_string(n) + "]");
  }
  if (n - m >= kMaxRange) throw Error("range " + std::string(pred) + " is too large");
  std::set<DataAtom> out;
  for (std::int64_t v = m;; ++v) {
    out.insert(DataAtom{std::string(pred), {Constant(v)}});
    if (v == n) break;
  }
  return out;
}

std::set<DataAtom> parseDataFile(std::string_view text, const ConstantMap& consts,
                                 std::string_view file) {
  TokenCursor in(tokenize(text, consts, file), file);
  std::set<DataAtom> out;
  while (!in.atEnd()) {
    const Token& head = in.expectIdent("a predicate name");
    if (isKeyword(head.text)) in.errorPlain(head, "'" + head.text + "' is a reserved keyword");
    if (in.accept("[")) {
      std::int64_t m = rangeBound(in);
      in.expect("..");
      std::int64_t n = rangeBound(in);
      in.expect("]");
      const Token& dot = in.expect(".");
      if (dot.line != head.line) in.errorPlain(head, "a range must be given on a single line");
      try {
        out.merge(expandRange(head.text, m, n));
      } catch (const Error& e) {
        in.errorPlain(head, e.what());
      }
      continue;
    }
    DataAtom atom{head.text, {}};
    if (in.accept("(")) {
      do {
        atom.args.push_back(dataConstant(in));
      } while (in.accept(","));
      in.expect(")");
    }
    const Token& dot = in.expect(".");
    if (dot.line != head.line) in.errorPlain(head, "a ground atom must be given on a single line");
    out.insert(std::move(atom));
  }
  return out;
}

namespace {

class RuleParser {
 public:
  RuleParser(std::vector<Token> toks, std::string_view file) : in_(std::move(toks), file) {}

  Program run() {
    while (!in_.atEnd()) {
      const Token& t = in_.peek();
      if (t.kind == TokenKind::Ident && t.text == "pred" && in_.peek(1).kind == TokenKind::Ident) {
        predDecl();
      } else if (t.kind == TokenKind::Ident && t.text == "var" &&
                 in_.peek(1).kind == TokenKind::Ident) {
        varDecl();
      } else {
        clause();
      }
    }
    return std::move(prog_);
  }

 private:
  void checkPredName(const Token& t) {
    if (isKeyword(t.text)) in_.errorPlain(t, "'" + t.text + "' is a reserved keyword");
    if (functionByName(t.text)) {
      in_.errorPlain(t, "'" + t.text + "' is a predefined function and cannot name a predicate");
    }
  }

  void predDecl() {
    const Token& kw = in_.next();
    const Token& name = in_.expectIdent("a predicate name");
    checkPredName(name);
    PredDecl d{name.text, {}, std::nullopt, {kw.line, kw.column}};
    if (in_.accept("(")) {
      do {
        d.argTypes.push_back(in_.expectIdent("a type predicate").text);
      } while (in_.accept(","));
      in_.expect(")");
    }
    if (in_.accept(":")) d.restriction = in_.expectIdent("a restriction predicate").text;
    in_.expect(".");
    if (usedPreds_.count(d.name)) {
      in_.errorPlain(name, "predicate " + d.name + " declared after first use");
    }
    if (const PredDecl* prev = prog_.findPred(d.name)) {
      if (!(*prev == d)) {
        in_.errorPlain(name, "predicate " + d.name + " declared twice with different signatures");
      }
      return;
    }
    prog_.predDecls.push_back(std::move(d));
  }

  void varDecl() {
    const Token& kw = in_.next();
    const Token& type = in_.expectIdent("a type predicate");
    VarDecl d{type.text, {}, {kw.line, kw.column}};
    do {
      const Token& v = in_.expectIdent("a variable name");
      if (isKeyword(v.text) || functionByName(v.text)) {
        in_.errorPlain(v, "'" + v.text + "' is reserved and cannot name a variable");
      }
      if (prog_.varType(v.text) || std::find(d.varNames.begin(), d.varNames.end(), v.text) !=
                                       d.varNames.end()) {
        in_.errorPlain(v, "variable " + v.text + " declared twice");
      }
      if (usedSymbols_.count(v.text)) {
        in_.errorPlain(v, "variable " + v.text + " declared after first use");
      }
      d.varNames.push_back(v.text);
    } while (in_.accept(","));
    in_.expect(".");
    prog_.varDecls.push_back(std::move(d));
  }

  void clause() {
    const Token& first = in_.peek();
    Clause c;
    c.pos = {first.line, first.column};
    if (!in_.peek().is("->")) {
      do {
        c.body.push_back(atom());
      } while (in_.accept(","));
    }
    in_.expect("->");
    if (!in_.peek().is(".")) {
      do {
        c.head.push_back(atom());
      } while (in_.accept("|"));
    }
    in_.expect(".");
    if (c.body.empty() && c.head.empty()) in_.errorPlain(first, "empty clause");
    prog_.clauses.push_back(std::move(c));
  }

  bool isVar(std::string_view name) const { return prog_.varType(name) != nullptr; }

  Term identTerm(const Token& t) {
    if (isVar(t.text)) return Term::var(t.text);
    if (looksLikeVariable(t.text)) in_.errorPlain(t, "variable " + t.text + " not declared");
    usedSymbols_.insert(t.text);
    return Term::constant(Constant::symbol(t.text));
  }

  Term expr() {
    Term lhs = product();
    while (in_.peek().is("+") || in_.peek().is("-")) {
      ArithOp op = in_.next().text == "+" ? ArithOp::Add : ArithOp::Sub;
      lhs = Term::arith(op, {std::move(lhs), product()});
    }
    return lhs;
  }

  Term product() {
    Term lhs = unary();
    while (in_.peek().is("*") || in_.peek().is("/")) {
      ArithOp op = in_.next().text == "*" ? ArithOp::Mul : ArithOp::Div;
      lhs = Term::arith(op, {std::move(lhs), unary()});
    }
    return lhs;
  }

  Term unary() {
    if (in_.peek().is("-")) {
      const Token& minus = in_.next();
      if (in_.peek().kind == TokenKind::Int && in_.peek().text[0] != '-') {
        const Token& n = in_.next();
        return Term::constant(Constant(-*parseInt(n.text)));
      }
      (void)minus;
      return Term::arith(ArithOp::Sub, {Term::constant(Constant(0)), unary()});
    }
    return primary();
  }

  Term primary() {
    const Token& t = in_.peek();
    if (t.kind == TokenKind::Int) {
      in_.next();
      return Term::constant(Constant(*parseInt(t.text)));
    }
    if (in_.accept("(")) {
      Term inner = expr();
      in_.expect(")");
      return inner;
    }
    if (t.kind == TokenKind::Ident) {
      in_.next();
      if (in_.peek().is("(")) {
        auto fn = functionByName(t.text);
        if (!fn) in_.errorPlain(t, "predicate " + t.text + " used as a term");
        in_.next();
        std::vector<Term> args;
        do {
          args.push_back(expr());
        } while (in_.accept(","));
        in_.expect(")");
        if (static_cast<int>(args.size()) != arity(*fn)) {
          in_.errorPlain(t, "function " + t.text + " takes " + std::to_string(arity(*fn)) +
                                " argument(s)");
        }
        return Term::arith(*fn, std::move(args));
      }
      return identTerm(t);
    }
    in_.error(t, "expected a term");
  }

  static bool isComparisonToken(const Token& t) {
    return t.kind == TokenKind::Punct && isComparison(t.text);
  }

  PlainAtom predAtom() {
    const Token& name = in_.expectIdent("a predicate name");
    checkPredName(name);
    if (isVar(name.text) || looksLikeVariable(name.text)) {
      in_.errorPlain(name, "expected a predicate name, found variable " + name.text);
    }
    usedPreds_.insert(name.text);
    PlainAtom a{name.text, {}};
    if (in_.accept("(")) {
      do {
        a.args.push_back(expr());
      } while (in_.accept(","));
      in_.expect(")");
    }
    return a;
  }

  // A predicate atom or a comparison.
  PlainAtom plainOrComparison() {
    const Token& t = in_.peek();
    if (t.kind == TokenKind::Ident && !functionByName(t.text) && in_.peek(1).is("(")) {
      return predAtom();
    }
    if (t.kind == TokenKind::Ident && !isVar(t.text) && !looksLikeVariable(t.text) &&
        !isComparisonToken(in_.peek(1)) && !in_.peek(1).is("(") && !isArithToken(in_.peek(1))) {
      return predAtom();
    }
    Term lhs = expr();
    if (!isComparisonToken(in_.peek())) in_.error(in_.peek(), "expected an atom");
    std::string op = in_.next().text;
    Term rhs = expr();
    return PlainAtom{std::move(op), {std::move(lhs), std::move(rhs)}};
  }

  static bool isArithToken(const Token& t) {
    return t.is("+") || t.is("-") || t.is("*") || t.is("/");
  }

  Bound bound(bool lower) {
    const Token& t = in_.peek();
    if (t.kind == TokenKind::Int) {
      in_.next();
      std::int64_t v = *parseInt(t.text);
      if (v < 0) in_.errorPlain(t, "cardinality bounds must be non-negative");
      return Constant(v);
    }
    if (t.kind == TokenKind::Ident) {
      if (isVar(t.text) || looksLikeVariable(t.text)) {
        in_.errorPlain(t, "cardinality bounds must be integers or constants");
      }
      in_.next();
      return Constant::symbol(t.text);
    }
    if (lower) in_.error(t, "expected a cardinality bound");
    return std::nullopt;
  }

  Atom catom() {
    Bound lo;
    if (!in_.peek().is("{")) lo = bound(true);
    const Token& open = in_.expect("{");
    PlainAtom member = predAtom();
    Atom result;
    if (in_.peek().is(",")) {
      CAtomList list{lo, {member.pred}, member.args, std::nullopt};
      while (in_.accept(",")) {
        const Token& at = in_.peek();
        PlainAtom other = predAtom();
        if (other.args != list.args) {
          in_.errorPlain(at, "atoms of a c-atom list must share the same arguments");
        }
        list.preds.push_back(other.pred);
      }
      in_.expect("}");
      list.hi = afterBrace();
      result = std::move(list);
    } else {
      CAtomSchema schema{lo, std::move(member), {}, std::nullopt};
      while (in_.accept(":")) schema.conds.push_back(plainOrComparison());
      in_.expect("}");
      schema.hi = afterBrace();
      result = std::move(schema);
    }
    auto bounds = std::visit(
        [](const auto& c) -> std::pair<Bound, Bound> {
          if constexpr (std::is_same_v<std::decay_t<decltype(c)>, CAtomSchema> ||
                        std::is_same_v<std::decay_t<decltype(c)>, CAtomList>) {
            return {c.lo, c.hi};
          } else {
            return {};
          }
        },
        result);
    if (bounds.first && bounds.second && bounds.first->isInt() && bounds.second->isInt() &&
        bounds.first->intValue() > bounds.second->intValue()) {
      in_.errorPlain(open, "lower bound exceeds upper bound");
    }
    return result;
  }

  Bound afterBrace() {
    const Token& t = in_.peek();
    if (t.kind == TokenKind::Int || t.kind == TokenKind::Ident) return bound(false);
    return std::nullopt;
  }

  Atom atom() {
    const Token& t = in_.peek();
    if (t.is("{") || ((t.kind == TokenKind::Int || t.kind == TokenKind::Ident) &&
                      in_.peek(1).is("{"))) {
      return catom();
    }
    if (t.kind == TokenKind::Ident && !functionByName(t.text) && in_.peek(1).is("(")) {
      PlainAtom a = predAtom();
      if (in_.peek().is(":")) return eatom(std::move(a));
      return a;
    }
    return plainOrComparison();
  }

  Atom eatom(PlainAtom a) {
    const Token& colon = in_.expect(":");
    const Token& dp = in_.expectIdent("a domain predicate");
    checkPredName(dp);
    usedPreds_.insert(dp.text);
    in_.expect("(");
    const Token& y = in_.expectIdent("a variable");
    if (!isVar(y.text)) {
      if (looksLikeVariable(y.text)) in_.errorPlain(y, "variable " + y.text + " not declared");
      in_.errorPlain(y, "the argument of an e-atom domain must be a variable");
    }
    in_.expect(")");
    if (a.args.empty() || !a.args.back().isVariable() || a.args.back().asVariable().name != y.text) {
      in_.errorPlain(colon, "the bound variable " + y.text + " must be the last argument of " +
                                a.pred);
    }
    for (std::size_t i = 0; i + 1 < a.args.size(); ++i) {
      std::vector<std::string> vars;
      collectVariables(a.args[i], vars);
      if (std::find(vars.begin(), vars.end(), y.text) != vars.end()) {
        in_.errorPlain(colon, "the bound variable " + y.text + " may occur only as the last argument");
      }
    }
    return EAtom{a.pred, std::move(a.args), y.text, dp.text};
  }

  TokenCursor in_;
  Program prog_;
  std::set<std::string, std::less<>> usedPreds_;
  std::set<std::string, std::less<>> usedSymbols_;
};

}  // namespace

Program parseRuleFile(std::string_view text, const ConstantMap& consts, std::string_view file) {
  return RuleParser(tokenize(text, consts, file), file).run();
}

}  // namespace aspps
