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

// Davis-Putnam search over ground theories with cardinality constructs:
// unit propagation extended to cards, chronological backtracking, and model
// enumeration without blocking clauses.

#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "aspps/ground_theory.hpp"
#include "aspps/tdc.hpp"

namespace aspps {

enum class TruthValue : std::int8_t { False = -1, Undetermined = 0, True = 1 };

struct SolveStats {
  std::uint64_t decisions = 0;
  std::uint64_t propagations = 0;
  std::uint64_t conflicts = 0;
  std::uint64_t modelsFound = 0;
  std::int64_t elapsedMs = 0;
};

enum class SolveStatus { Sat, Unsat };

std::string_view toString(SolveStatus s);

struct SolveOptions {
  // Keep searching past the first model.
  bool countModels = false;
  // Stop after this many models; only consulted when counting.
  std::optional<std::uint64_t> maxModels;
};

struct SolveResult {
  SolveStatus status = SolveStatus::Unsat;
  std::vector<Assignment> models;
  SolveStats stats;
};

class Solver {
 public:
  enum class Reason : std::uint8_t { Decision, Propagated };

  struct TrailEntry {
    Lit lit;
    int level;
    Reason reason;
  };

  explicit Solver(const GroundTheory& theory);

  TruthValue value(Lit id) const { return values_[static_cast<std::size_t>(id)]; }
  TruthValue litValue(Lit lit) const;

  // Sets `lit` true. Returns false, leaving the state untouched, when the
  // literal is already false. Asserting a true literal again is a no-op.
  bool assertLiteral(Lit lit, Reason reason);

  // Runs unit propagation to a fixpoint. The first call also examines every
  // clause and card once. Returns false on conflict.
  bool propagate();

  // Status of card `id` over every completion of its undetermined members.
  TruthValue cardStatus(Lit id) const;
  int trueCount(Lit cardId) const { return cardCounts_[cardIndex(cardId)].trueCount; }
  int undecidedCount(Lit cardId) const { return cardCounts_[cardIndex(cardId)].undecided; }

  // The undetermined atom with the most occurrences in clauses that have no
  // true literal (card literals count each undetermined member), lowest id on
  // ties, positive polarity. nullopt when every atom is assigned.
  std::optional<Lit> chooseBranch() const;

  // Starts a new decision level and asserts `lit` on it.
  bool decide(Lit lit);
  // Undoes every assignment above `level`.
  void backtrackTo(int level);
  int decisionLevel() const { return static_cast<int>(levelStart_.size()); }

  const std::vector<TrailEntry>& trail() const { return trail_; }
  const SolveStats& stats() const { return stats_; }
  bool allAtomsAssigned() const { return assignedAtoms_ == theory_.numAtoms(); }
  Assignment currentModel() const;

  // Runs the search. `onModel` sees each model as it is found and may return
  // false to stop early.
  SolveStatus solve(const SolveOptions& options,
                    const std::function<bool(const Assignment&)>& onModel);

 private:
  struct CardCount {
    int trueCount = 0;
    int undecided = 0;
  };
  struct Decision {
    Lit lit;
    bool flipped;
  };

  std::size_t cardIndex(Lit id) const { return static_cast<std::size_t>(id - theory_.numAtoms() - 1); }
  bool isCard(Lit id) const { return id > theory_.numAtoms(); }
  bool enqueue(Lit lit, Reason reason);
  bool checkClause(std::size_t ci);
  bool checkCard(Lit cardId);
  bool forceMembers(Lit cardId, bool value);
  bool examineAll();
  // Flips the most recent unflipped decision; false when none is left.
  bool backtrackChronologically();

  const GroundTheory& theory_;
  std::vector<TruthValue> values_;
  std::vector<TrailEntry> trail_;
  std::vector<std::size_t> levelStart_;
  std::vector<Decision> decisions_;
  std::size_t qhead_ = 0;
  bool examined_ = false;
  Lit assignedAtoms_ = 0;

  std::vector<CardCount> cardCounts_;
  // Cards each atom belongs to.
  std::vector<std::vector<Lit>> atomCards_;
  // Clauses containing each literal, indexed by literal + numVars.
  std::vector<std::vector<std::size_t>> occurrences_;
  SolveStats stats_;
};

// Convenience wrapper collecting every model found.
SolveResult solve(const GroundTheory& theory, const SolveOptions& options = {});

// Positive atoms of `model`, one per line in id order; with `filter`, only
// atoms of that predicate. When no atom of the theory has predicate `filter`
// a warning goes to `warn`.
std::string printModel(const Assignment& model, const GroundTheory& theory,
                       std::optional<std::string_view> filter = std::nullopt,
                       std::ostream* warn = nullptr);

// The line appended to aspps.stat, without its newline.
std::string statsLine(const SolveStats& stats, std::string_view theoryFile, SolveStatus status);

// Appends statsLine to `path`, creating it if needed. Throws Error on I/O
// failure.
void recordStats(const SolveStats& stats, std::string_view theoryFile, SolveStatus status,
                 const std::filesystem::path& path = "aspps.stat");

}  // namespace aspps
