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

#include <stdexcept>
#include <string>
#include <vector>

namespace aspps {

// Base class of every error raised by the toolchain.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A located message, rendered as `file:line:col: message`.
struct Diagnostic {
  std::string file;
  int line = 0;
  int column = 0;
  std::string message;

  std::string str() const;
};

// Syntax errors and declaration errors found while reading input files.
class ParseError : public Error {
 public:
  explicit ParseError(Diagnostic d);
  const Diagnostic& diagnostic() const { return diag_; }

 private:
  Diagnostic diag_;
};

// Type-checking failures; carries every violation found, not just the first.
class CheckError : public Error {
 public:
  explicit CheckError(std::vector<Diagnostic> diags);
  const std::vector<Diagnostic>& diagnostics() const { return diags_; }

 private:
  std::vector<Diagnostic> diags_;
};

// Evaluation failures at grounding time (symbolic arithmetic, division by
// zero, overflow, bad bounds).
class GroundError : public Error {
 public:
  using Error::Error;
};

// Type errors on data predicates (for example, a non-unary type).
class TypeError : public Error {
 public:
  using Error::Error;
};

// Malformed `.tdc` input.
class FormatError : public Error {
 public:
  FormatError(int line, const std::string& message);
  int line() const { return line_; }

 private:
  int line_;
};

}  // namespace aspps
