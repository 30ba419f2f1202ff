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

#include "aspps/tdc.hpp"

#include <charconv>
#include <cstdint>
#include <optional>

#include "aspps/error.hpp"
#include "aspps/parser.hpp"

namespace aspps {

std::string writeTdc(const GroundTheory& gt) {
  std::string out = "tdc " + std::to_string(kTdcVersion) + "\n";
  out += "atoms " + std::to_string(gt.atoms.size()) + "\n";
  for (const auto& a : gt.atoms) out += std::to_string(a.id) + " " + a.text + "\n";
  out += "cards " + std::to_string(gt.cards.size()) + "\n";
  for (const auto& c : gt.cards) {
    out += std::to_string(c.id) + " " + std::to_string(c.lo) + " " + std::to_string(c.hi) + " " +
           std::to_string(c.members.size());
    for (Lit m : c.members) out += " " + std::to_string(m);
    out += "\n";
  }
  out += "clauses " + std::to_string(gt.clauses.size()) + "\n";
  for (const auto& c : gt.clauses) {
    out += std::to_string(c.literals.size());
    for (Lit l : c.literals) out += " " + std::to_string(l);
    out += "\n";
  }
  return out;
}

namespace {

class LineReader {
 public:
  explicit LineReader(std::string_view text) : text_(text) {}

  // Next line, without its newline; nullopt at end of input.
  std::optional<std::string_view> next() {
    if (pos_ >= text_.size()) return std::nullopt;
    ++line_;
    auto nl = text_.find('\n', pos_);
    if (nl == std::string_view::npos) nl = text_.size();
    std::string_view out = text_.substr(pos_, nl - pos_);
    pos_ = nl + 1;
    return out;
  }
  std::string_view require(std::string_view what) {
    auto l = next();
    if (!l) throw FormatError(line_ + 1, "unexpected end of input, expected " + std::string(what));
    return *l;
  }
  int line() const { return line_; }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 0;
};

std::vector<std::string_view> fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && line[i] == ' ') ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::int64_t number(std::string_view s, int line) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw FormatError(line, "expected an integer, found '" + std::string(s) + "'");
  }
  return v;
}

std::int64_t header(LineReader& in, std::string_view keyword) {
  auto f = fields(in.require(keyword));
  if (f.size() != 2 || f[0] != keyword) {
    throw FormatError(in.line(), "expected '" + std::string(keyword) + " <count>'");
  }
  std::int64_t n = number(f[1], in.line());
  if (n < 0) throw FormatError(in.line(), "negative count");
  return n;
}

GroundAtom parseAtomText(Lit id, std::string_view text, int line) {
  GroundAtom a;
  a.id = id;
  auto open = text.find('(');
  if (open == std::string_view::npos) {
    a.pred = std::string(text);
  } else {
    if (text.back() != ')') throw FormatError(line, "malformed atom '" + std::string(text) + "'");
    a.pred = std::string(text.substr(0, open));
    std::string_view inner = text.substr(open + 1, text.size() - open - 2);
    std::size_t i = 0;
    while (true) {
      auto comma = inner.find(',', i);
      std::string_view arg = inner.substr(i, comma == std::string_view::npos ? inner.npos : comma - i);
      if (arg.empty()) throw FormatError(line, "malformed atom '" + std::string(text) + "'");
      Constant c = Constant::fromText(arg);
      if (!c.isInt() && !isIdentifier(arg)) {
        throw FormatError(line, "malformed atom '" + std::string(text) + "'");
      }
      a.args.push_back(std::move(c));
      if (comma == std::string_view::npos) break;
      i = comma + 1;
    }
  }
  if (!isIdentifier(a.pred)) throw FormatError(line, "malformed atom '" + std::string(text) + "'");
  a.text = atomText(a.pred, a.args);
  if (a.text != text) throw FormatError(line, "non-canonical atom '" + std::string(text) + "'");
  return a;
}

}  // namespace

GroundTheory readTdc(std::string_view text) {
  LineReader in(text);
  {
    auto f = fields(in.require("the tdc header"));
    if (f.size() != 2 || f[0] != "tdc") throw FormatError(in.line(), "not a tdc file");
    if (number(f[1], in.line()) != kTdcVersion) {
      throw FormatError(in.line(), "unsupported tdc version " + std::string(f[1]));
    }
  }
  GroundTheory gt;
  const std::int64_t numAtoms = header(in, "atoms");
  for (std::int64_t i = 1; i <= numAtoms; ++i) {
    std::string_view line = in.require("an atom line");
    auto sp = line.find(' ');
    if (sp == std::string_view::npos) throw FormatError(in.line(), "expected '<id> <text>'");
    if (number(line.substr(0, sp), in.line()) != i) {
      throw FormatError(in.line(), "atom ids must be 1..N in order");
    }
    gt.atoms.push_back(parseAtomText(static_cast<Lit>(i), line.substr(sp + 1), in.line()));
  }
  const std::int64_t numCards = header(in, "cards");
  for (std::int64_t i = 1; i <= numCards; ++i) {
    auto f = fields(in.require("a card line"));
    if (f.size() < 4) throw FormatError(in.line(), "expected '<id> <lo> <hi> <k> <members>'");
    CardConstruct c;
    if (number(f[0], in.line()) != numAtoms + i) {
      throw FormatError(in.line(), "card ids must follow the atom ids in order");
    }
    c.id = static_cast<Lit>(numAtoms + i);
    c.lo = number(f[1], in.line());
    c.hi = number(f[2], in.line());
    const std::int64_t k = number(f[3], in.line());
    if (k < 1 || static_cast<std::int64_t>(f.size()) != 4 + k) {
      throw FormatError(in.line(), "member count does not match");
    }
    for (std::int64_t j = 0; j < k; ++j) {
      const std::int64_t m = number(f[static_cast<std::size_t>(4 + j)], in.line());
      if (m < 1 || m > numAtoms) throw FormatError(in.line(), "dangling atom id " + std::to_string(m));
      if (!c.members.empty() && m <= c.members.back()) {
        throw FormatError(in.line(), "card members must be ascending and distinct");
      }
      c.members.push_back(static_cast<Lit>(m));
    }
    if (c.lo < 0 || c.lo > k || (c.hi != kUnbounded && (c.hi < c.lo || c.hi > k))) {
      throw FormatError(in.line(), "card bounds out of range");
    }
    gt.cards.push_back(std::move(c));
  }
  const std::int64_t numVars = numAtoms + numCards;
  const std::int64_t numClauses = header(in, "clauses");
  for (std::int64_t i = 0; i < numClauses; ++i) {
    auto f = fields(in.require("a clause line"));
    if (f.empty()) throw FormatError(in.line(), "expected '<n> <literals>'");
    const std::int64_t n = number(f[0], in.line());
    if (n < 0 || static_cast<std::int64_t>(f.size()) != 1 + n) {
      throw FormatError(in.line(), "literal count does not match");
    }
    GroundClause c;
    for (std::int64_t j = 1; j <= n; ++j) {
      const std::int64_t l = number(f[static_cast<std::size_t>(j)], in.line());
      if (l == 0 || l > numVars || -l > numVars) {
        throw FormatError(in.line(), "dangling id " + std::to_string(l));
      }
      c.literals.push_back(static_cast<Lit>(l));
    }
    gt.clauses.push_back(std::move(c));
  }
  while (auto rest = in.next()) {
    if (!fields(*rest).empty()) throw FormatError(in.line(), "trailing content");
  }
  return gt;
}

namespace {

std::string literalText(const GroundTheory& gt, Lit lit) {
  const Lit v = lit < 0 ? -lit : lit;
  std::string out = lit < 0 ? "-" : "";
  if (!gt.isCard(v)) return out + gt.atom(v).text;
  const auto& c = gt.card(v);
  out += std::to_string(c.lo) + " {";
  for (std::size_t i = 0; i < c.members.size(); ++i) {
    if (i) out += ", ";
    out += gt.atom(c.members[i]).text;
  }
  out += "}";
  if (c.hi != kUnbounded) out += " " + std::to_string(c.hi);
  return out;
}

}  // namespace

std::string printTheory(const GroundTheory& gt) {
  std::string out;
  for (const auto& c : gt.clauses) {
    if (c.literals.empty()) {
      out += "FALSE\n";
      continue;
    }
    for (std::size_t i = 0; i < c.literals.size(); ++i) {
      if (i) out += " | ";
      out += literalText(gt, c.literals[i]);
    }
    out += "\n";
  }
  return out;
}

bool cardHolds(const CardConstruct& card, const Assignment& assignment) {
  std::int64_t count = 0;
  for (Lit m : card.members) count += assignment[static_cast<std::size_t>(m)] ? 1 : 0;
  return count >= card.lo && (card.hi == kUnbounded || count <= card.hi);
}

bool checkModel(const GroundTheory& gt, const Assignment& assignment) {
  if (assignment.size() < static_cast<std::size_t>(gt.numAtoms()) + 1) return false;
  std::vector<bool> cardValue;
  cardValue.reserve(gt.cards.size());
  for (const auto& c : gt.cards) cardValue.push_back(cardHolds(c, assignment));
  for (const auto& c : gt.clauses) {
    bool sat = false;
    for (Lit l : c.literals) {
      const Lit v = l < 0 ? -l : l;
      const bool value = gt.isCard(v) ? cardValue[static_cast<std::size_t>(v - gt.numAtoms() - 1)]
                                      : assignment[static_cast<std::size_t>(v)];
      if (value == (l > 0)) {
        sat = true;
        break;
      }
    }
    if (!sat) return false;
  }
  return true;
}

}  // namespace aspps
