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

// Command-line front ends:
//
//   psgrnd -r rfile -d dfile1 dfile2 ... [-c c1=v1 c2=v2 ...]
//   aspps  -f filename [-A] [-P] [-C [x]] [-S name]
//
// Exit codes: 0 success (an unsatisfiable theory included), 1 usage error,
// 2 input, parse, type or grounding error, 3 internal or output error.

#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "aspps/error.hpp"
#include "aspps/parser.hpp"

namespace aspps {

enum ExitCode : int { kExitOk = 0, kExitUsage = 1, kExitInput = 2, kExitInternal = 3 };

class UsageError : public Error {
 public:
  using Error::Error;
};

struct PsgrndArgs {
  std::string ruleFile;
  std::vector<std::string> dataFiles;
  ConstantMap constants;
};

struct AsppsArgs {
  std::string theoryFile;
  bool printAtoms = false;
  bool printTheory = false;
  bool countModels = false;
  // Set by `-C x`; unlimited when counting without x.
  std::optional<std::uint64_t> maxModels;
  std::optional<std::string> showPred;
};

// Both parsers take the arguments after the program name and throw
// UsageError.
PsgrndArgs parsePsgrndArgs(std::span<const std::string> args);
AsppsArgs parseAsppsArgs(std::span<const std::string> args);

int psgrndMain(std::span<const std::string> args, std::ostream& out, std::ostream& err);
int asppsMain(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace aspps
