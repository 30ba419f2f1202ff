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

#include <compare>
#include <cstddef>
#include <map>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "aspps/core.hpp"
#include "aspps/parser.hpp"

namespace aspps {

// A data predicate is identified by name and arity.
struct PredKey {
  std::string name;
  std::size_t arity = 0;

  auto operator<=>(const PredKey&) const = default;
  bool operator==(const PredKey&) const = default;
};

// Extensions of data predicates. Anything not stored is false.
class DataDatabase {
 public:
  void insert(const DataAtom& atom);

  bool contains(std::string_view pred, std::span<const Constant> tuple) const;

  // Extension of pred/1, integers ascending then symbols lexicographically.
  // Empty when the predicate has no atoms at all. Throws TypeError when the
  // predicate only occurs at other arities.
  std::vector<Constant> unaryDomain(std::string_view pred) const;

  // Arities at which `name` has a non-empty extension.
  std::vector<std::size_t> arities(std::string_view name) const;
  bool hasPredicate(std::string_view name) const { return !arities(name).empty(); }
  std::set<std::string, std::less<>> predicateNames() const;

  const std::set<Tuple>* extension(const PredKey& key) const;
  std::size_t size() const;
  bool empty() const { return ext_.empty(); }

 private:
  std::map<PredKey, std::set<Tuple>> ext_;
};

DataDatabase buildDatabase(const std::set<DataAtom>& atoms);

}  // namespace aspps
