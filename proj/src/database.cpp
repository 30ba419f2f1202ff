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

#include "aspps/database.hpp"

#include "aspps/error.hpp"

namespace aspps {

void DataDatabase::insert(const DataAtom& atom) {
  ext_[PredKey{atom.pred, atom.args.size()}].insert(atom.args);
}

bool DataDatabase::contains(std::string_view pred, std::span<const Constant> tuple) const {
  auto it = ext_.find(PredKey{std::string(pred), tuple.size()});
  if (it == ext_.end()) return false;
  return it->second.count(Tuple(tuple.begin(), tuple.end())) != 0;
}

std::vector<Constant> DataDatabase::unaryDomain(std::string_view pred) const {
  auto it = ext_.find(PredKey{std::string(pred), 1});
  if (it == ext_.end()) {
    if (hasPredicate(pred)) {
      throw TypeError("type predicate " + std::string(pred) + " is not unary");
    }
    return {};
  }
  std::vector<Constant> out;
  out.reserve(it->second.size());
  for (const auto& t : it->second) out.push_back(t[0]);
  return out;
}

std::vector<std::size_t> DataDatabase::arities(std::string_view name) const {
  std::vector<std::size_t> out;
  for (auto it = ext_.lower_bound(PredKey{std::string(name), 0});
       it != ext_.end() && it->first.name == name; ++it) {
    out.push_back(it->first.arity);
  }
  return out;
}

std::set<std::string, std::less<>> DataDatabase::predicateNames() const {
  std::set<std::string, std::less<>> out;
  for (const auto& [key, tuples] : ext_) out.insert(key.name);
  return out;
}

const std::set<Tuple>* DataDatabase::extension(const PredKey& key) const {
  auto it = ext_.find(key);
  return it == ext_.end() ? nullptr : &it->second;
}

std::size_t DataDatabase::size() const {
  std::size_t n = 0;
  for (const auto& [key, tuples] : ext_) n += tuples.size();
  return n;
}

DataDatabase buildDatabase(const std::set<DataAtom>& atoms) {
  DataDatabase db;
  for (const auto& a : atoms) db.insert(a);
  return db;
}

}  // namespace aspps
