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

#include "aspps/solver.hpp"

#include <chrono>
#include <fstream>

#include "aspps/error.hpp"

namespace aspps {

std::string_view toString(SolveStatus s) { return s == SolveStatus::Sat ? "SAT" : "UNSAT"; }

Solver::Solver(const GroundTheory& theory)
    : theory_(theory),
      values_(static_cast<std::size_t>(theory.numVars()) + 1, TruthValue::Undetermined),
      cardCounts_(theory.cards.size()),
      atomCards_(static_cast<std::size_t>(theory.numAtoms()) + 1),
      occurrences_(2 * static_cast<std::size_t>(theory.numVars()) + 1) {
  for (const auto& c : theory.cards) {
    cardCounts_[cardIndex(c.id)].undecided = static_cast<int>(c.members.size());
    for (Lit m : c.members) atomCards_[static_cast<std::size_t>(m)].push_back(c.id);
  }
  for (std::size_t ci = 0; ci < theory.clauses.size(); ++ci) {
    for (Lit l : theory.clauses[ci].literals) {
      occurrences_[static_cast<std::size_t>(l + theory.numVars())].push_back(ci);
    }
  }
}

TruthValue Solver::litValue(Lit lit) const {
  const TruthValue v = value(lit < 0 ? -lit : lit);
  if (lit > 0 || v == TruthValue::Undetermined) return v;
  return v == TruthValue::True ? TruthValue::False : TruthValue::True;
}

bool Solver::assertLiteral(Lit lit, Reason reason) {
  const Lit v = lit < 0 ? -lit : lit;
  const TruthValue want = lit > 0 ? TruthValue::True : TruthValue::False;
  const TruthValue cur = value(v);
  if (cur == want) return true;
  if (cur != TruthValue::Undetermined) return false;
  values_[static_cast<std::size_t>(v)] = want;
  trail_.push_back({lit, decisionLevel(), reason});
  if (!isCard(v)) {
    ++assignedAtoms_;
    for (Lit c : atomCards_[static_cast<std::size_t>(v)]) {
      auto& cnt = cardCounts_[cardIndex(c)];
      --cnt.undecided;
      if (want == TruthValue::True) ++cnt.trueCount;
    }
  }
  if (reason == Reason::Propagated) ++stats_.propagations;
  return true;
}

bool Solver::enqueue(Lit lit, Reason reason) { return assertLiteral(lit, reason); }

TruthValue Solver::cardStatus(Lit id) const {
  const auto& c = theory_.card(id);
  const auto& cnt = cardCounts_[cardIndex(id)];
  const std::int64_t t = cnt.trueCount;
  const std::int64_t u = cnt.undecided;
  if (t + u < c.lo || (c.hi != kUnbounded && t > c.hi)) return TruthValue::False;
  if (t >= c.lo && (c.hi == kUnbounded || t + u <= c.hi)) return TruthValue::True;
  return TruthValue::Undetermined;
}

bool Solver::checkClause(std::size_t ci) {
  int open = 0;
  Lit unit = 0;
  for (Lit l : theory_.clauses[ci].literals) {
    const TruthValue v = litValue(l);
    if (v == TruthValue::True) return true;
    if (v == TruthValue::Undetermined && unit != l) {
      ++open;
      unit = l;
    }
  }
  if (open == 0) return false;
  if (open == 1) return enqueue(unit, Reason::Propagated);
  return true;
}

bool Solver::forceMembers(Lit cardId, bool value) {
  for (Lit m : theory_.card(cardId).members) {
    if (this->value(m) == TruthValue::Undetermined && !enqueue(value ? m : -m, Reason::Propagated)) {
      return false;
    }
  }
  return true;
}

bool Solver::checkCard(Lit id) {
  const auto& c = theory_.card(id);
  const auto& cnt = cardCounts_[cardIndex(id)];
  const std::int64_t t = cnt.trueCount;
  const std::int64_t u = cnt.undecided;
  const TruthValue status = cardStatus(id);
  switch (value(id)) {
    case TruthValue::Undetermined:
      if (status == TruthValue::True) return enqueue(id, Reason::Propagated);
      if (status == TruthValue::False) return enqueue(-id, Reason::Propagated);
      return true;
    case TruthValue::True:
      if (status == TruthValue::False) return false;
      if (u > 0 && c.hi != kUnbounded && t == c.hi) return forceMembers(id, false);
      if (u > 0 && t + u == c.lo) return forceMembers(id, true);
      return true;
    case TruthValue::False: {
      const bool canGoBelow = t < c.lo;
      const bool canGoAbove = c.hi != kUnbounded && t + u > c.hi;
      if (!canGoBelow && !canGoAbove) return false;
      if (u > 0 && canGoAbove && !canGoBelow && t + u == c.hi + 1) return forceMembers(id, true);
      if (u > 0 && canGoBelow && !canGoAbove && t == c.lo - 1) return forceMembers(id, false);
      return true;
    }
  }
  return true;
}

bool Solver::examineAll() {
  for (std::size_t ci = 0; ci < theory_.clauses.size(); ++ci) {
    if (!checkClause(ci)) return false;
  }
  for (const auto& c : theory_.cards) {
    if (!checkCard(c.id)) return false;
  }
  return true;
}

bool Solver::propagate() {
  if (!examined_) {
    examined_ = true;
    if (!examineAll()) return false;
  }
  while (qhead_ < trail_.size()) {
    const Lit lit = trail_[qhead_++].lit;
    const Lit v = lit < 0 ? -lit : lit;
    if (isCard(v)) {
      if (!checkCard(v)) return false;
    } else {
      for (Lit c : atomCards_[static_cast<std::size_t>(v)]) {
        if (!checkCard(c)) return false;
      }
    }
    // Only clauses where `lit` just became false can turn unit or empty.
    for (std::size_t ci : occurrences_[static_cast<std::size_t>(theory_.numVars() - lit)]) {
      if (!checkClause(ci)) return false;
    }
  }
  return true;
}

std::optional<Lit> Solver::chooseBranch() const {
  if (allAtomsAssigned()) return std::nullopt;
  std::vector<int> score(static_cast<std::size_t>(theory_.numAtoms()) + 1, 0);
  for (const auto& clause : theory_.clauses) {
    bool satisfied = false;
    for (Lit l : clause.literals) {
      if (litValue(l) == TruthValue::True) {
        satisfied = true;
        break;
      }
    }
    if (satisfied) continue;
    for (Lit l : clause.literals) {
      const Lit v = l < 0 ? -l : l;
      if (isCard(v)) {
        for (Lit m : theory_.card(v).members) {
          if (value(m) == TruthValue::Undetermined) ++score[static_cast<std::size_t>(m)];
        }
      } else if (value(v) == TruthValue::Undetermined) {
        ++score[static_cast<std::size_t>(v)];
      }
    }
  }
  Lit best = 0;
  for (Lit a = 1; a <= theory_.numAtoms(); ++a) {
    if (value(a) != TruthValue::Undetermined) continue;
    if (best == 0 || score[static_cast<std::size_t>(a)] > score[static_cast<std::size_t>(best)]) {
      best = a;
    }
  }
  return best;
}

bool Solver::decide(Lit lit) {
  levelStart_.push_back(trail_.size());
  decisions_.push_back({lit, false});
  ++stats_.decisions;
  return assertLiteral(lit, Reason::Decision);
}

void Solver::backtrackTo(int level) {
  while (decisionLevel() > level) {
    const std::size_t start = levelStart_.back();
    while (trail_.size() > start) {
      const Lit lit = trail_.back().lit;
      const Lit v = lit < 0 ? -lit : lit;
      trail_.pop_back();
      if (!isCard(v)) {
        --assignedAtoms_;
        for (Lit c : atomCards_[static_cast<std::size_t>(v)]) {
          auto& cnt = cardCounts_[cardIndex(c)];
          ++cnt.undecided;
          if (lit > 0) --cnt.trueCount;
        }
      }
      values_[static_cast<std::size_t>(v)] = TruthValue::Undetermined;
    }
    levelStart_.pop_back();
    decisions_.pop_back();
  }
  qhead_ = std::min(qhead_, trail_.size());
}

bool Solver::backtrackChronologically() {
  while (!decisions_.empty() && decisions_.back().flipped) backtrackTo(decisionLevel() - 1);
  if (decisions_.empty()) return false;
  const Lit lit = decisions_.back().lit;
  backtrackTo(decisionLevel() - 1);
  levelStart_.push_back(trail_.size());
  decisions_.push_back({-lit, true});
  assertLiteral(-lit, Reason::Decision);
  return true;
}

Assignment Solver::currentModel() const {
  Assignment m(static_cast<std::size_t>(theory_.numAtoms()) + 1, false);
  for (Lit a = 1; a <= theory_.numAtoms(); ++a) m[static_cast<std::size_t>(a)] = value(a) == TruthValue::True;
  return m;
}

SolveStatus Solver::solve(const SolveOptions& options,
                          const std::function<bool(const Assignment&)>& onModel) {
  const auto start = std::chrono::steady_clock::now();
  const std::optional<std::uint64_t> limit =
      options.countModels ? options.maxModels : std::optional<std::uint64_t>(1);

  bool conflict = !propagate();
  while (true) {
    if (conflict) {
      ++stats_.conflicts;
      if (!backtrackChronologically()) break;
      conflict = !propagate();
      continue;
    }
    if (allAtomsAssigned()) {
      ++stats_.modelsFound;
      const bool more = !onModel || onModel(currentModel());
      if (!more || (limit && stats_.modelsFound >= *limit)) break;
      // Continue as after a conflict.
      if (!backtrackChronologically()) break;
      conflict = !propagate();
      continue;
    }
    conflict = !decide(*chooseBranch()) || !propagate();
  }

  stats_.elapsedMs = std::chrono::duration_cast<std::chrono::milliseconds>(
                         std::chrono::steady_clock::now() - start)
                         .count();
  return stats_.modelsFound > 0 ? SolveStatus::Sat : SolveStatus::Unsat;
}

SolveResult solve(const GroundTheory& theory, const SolveOptions& options) {
  Solver s(theory);
  SolveResult result;
  result.status = s.solve(options, [&](const Assignment& m) {
    result.models.push_back(m);
    return true;
  });
  result.stats = s.stats();
  return result;
}

std::string printModel(const Assignment& model, const GroundTheory& theory,
                       std::optional<std::string_view> filter, std::ostream* warn) {
  std::string out;
  bool predicateSeen = false;
  for (const auto& a : theory.atoms) {
    if (filter && a.pred != *filter) continue;
    predicateSeen = true;
    if (model[static_cast<std::size_t>(a.id)]) out += a.text + "\n";
  }
  if (filter && !predicateSeen && warn) {
    *warn << "warning: no atom with predicate " << *filter << "\n";
  }
  return out;
}

std::string statsLine(const SolveStats& stats, std::string_view theoryFile, SolveStatus status) {
  return "file=" + std::string(theoryFile) + " result=" + std::string(toString(status)) +
         " models=" + std::to_string(stats.modelsFound) +
         " decisions=" + std::to_string(stats.decisions) +
         " propagations=" + std::to_string(stats.propagations) +
         " conflicts=" + std::to_string(stats.conflicts) +
         " time_ms=" + std::to_string(stats.elapsedMs);
}

void recordStats(const SolveStats& stats, std::string_view theoryFile, SolveStatus status,
                 const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::app);
  if (!out) throw Error("cannot open " + path.string() + " for appending");
  out << statsLine(stats, theoryFile, status) << '\n';
  out.flush();
  if (!out) throw Error("cannot write " + path.string());
}

}  // namespace aspps
