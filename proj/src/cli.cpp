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

#include "aspps/cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <fstream>
#include <sstream>

#include "aspps/database.hpp"
#include "aspps/grounder.hpp"
#include "aspps/solver.hpp"
#include "aspps/tdc.hpp"

namespace aspps {

namespace {

constexpr const char* kPsgrndUsage =
    "usage: psgrnd -r rfile -d dfile1 dfile2 ... [-c c1=v1 c2=v2 ...]\n";
constexpr const char* kAsppsUsage = "usage: aspps -f filename [-A] [-P] [-C [x]] [-S name]\n";

void runParser(CLI::App& app, std::span<const std::string> args) {
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }
}

std::optional<std::string> readFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) return std::nullopt;
  return ss.str();
}

}  // namespace

PsgrndArgs parsePsgrndArgs(std::span<const std::string> args) {
  CLI::App app{"Grounds a typed theory into a .tdc file", "psgrnd"};
  app.set_help_flag();
  std::vector<std::string> rules;
  std::vector<std::string> data;
  std::vector<std::string> consts;
  app.add_option("-r", rules, "rule file")->expected(1);
  app.add_option("-d", data, "data files")->expected(1, CLI::detail::expected_max_vector_size);
  app.add_option("-c", consts, "constants name=value")
      ->expected(1, CLI::detail::expected_max_vector_size);
  runParser(app, args);

  if (rules.empty()) throw UsageError("missing rule file (-r)");
  if (rules.size() > 1) throw UsageError("there must be exactly one rule file (-r)");
  if (data.empty()) throw UsageError("missing data files (-d)");

  PsgrndArgs out;
  out.ruleFile = rules.front();
  out.dataFiles = std::move(data);
  for (const auto& c : consts) {
    auto eq = c.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == c.size() ||
        !isIdentifier(c.substr(0, eq))) {
      throw UsageError("malformed constant '" + c + "', expected name=value");
    }
    try {
      out.constants.set(c.substr(0, eq), c.substr(eq + 1));
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  return out;
}

AsppsArgs parseAsppsArgs(std::span<const std::string> args) {
  CLI::App app{"Computes models of a ground theory", "aspps"};
  app.set_help_flag();
  AsppsArgs out;
  std::vector<std::string> files;
  std::vector<std::string> count;
  std::vector<std::string> show;
  app.add_option("-f", files, "theory file")->expected(1);
  app.add_flag("-A", out.printAtoms, "print the positive atoms of each model");
  app.add_flag("-P", out.printTheory, "print the theory and exit");
  auto* countOpt = app.add_option("-C", count, "count models, stopping after x")->expected(0, 1);
  app.add_option("-S", show, "show positive atoms of one predicate")->expected(1);
  runParser(app, args);

  if (files.empty()) throw UsageError("missing theory file (-f)");
  if (files.size() > 1) throw UsageError("-f given more than once");
  if (show.size() > 1) throw UsageError("-S given more than once");
  out.theoryFile = files.front();
  if (!show.empty()) out.showPred = show.front();
  if (countOpt->count() > 0) {
    out.countModels = true;
    std::erase(count, std::string());
    if (count.size() > 1) throw UsageError("-C given more than once");
    if (!count.empty()) {
      const std::string& x = count.front();
      std::uint64_t v = 0;
      auto [ptr, ec] = std::from_chars(x.data(), x.data() + x.size(), v);
      if (ec != std::errc() || ptr != x.data() + x.size() || v == 0) {
        throw UsageError("-C expects a positive integer, got '" + x + "'");
      }
      out.maxModels = v;
    }
  }
  return out;
}

int psgrndMain(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  (void)out;
  PsgrndArgs a;
  try {
    a = parsePsgrndArgs(args);
  } catch (const UsageError& e) {
    err << "psgrnd: " << e.what() << "\n" << kPsgrndUsage;
    return kExitUsage;
  }

  try {
    std::set<DataAtom> atoms;
    for (const auto& path : a.dataFiles) {
      auto text = readFile(path);
      if (!text) {
        err << "psgrnd: cannot read data file " << path << "\n";
        return kExitInput;
      }
      atoms.merge(parseDataFile(*text, a.constants, path));
    }
    const DataDatabase db = buildDatabase(atoms);

    auto ruleText = readFile(a.ruleFile);
    if (!ruleText) {
      err << "psgrnd: cannot read rule file " << a.ruleFile << "\n";
      return kExitInput;
    }
    const Program prog = parseRuleFile(*ruleText, a.constants, a.ruleFile);
    if (auto diags = checkProgram(prog, db, a.ruleFile); !diags.empty()) {
      for (const auto& d : diags) err << d.str() << "\n";
      return kExitInput;
    }
    Grounder g(prog, db);
    g.groundAll();
    const GroundTheory gt = g.finish();

    const std::string name = outputName(a.constants, a.ruleFile, a.dataFiles);
    std::ofstream file(name, std::ios::binary | std::ios::trunc);
    file << writeTdc(gt);
    file.close();
    if (!file) {
      err << "psgrnd: cannot write " << name << "\n";
      return kExitInternal;
    }
    if (gt.hasEmptyClause()) {
      err << "psgrnd: warning: grounding produced the empty clause; the theory has no models\n";
    }
    return kExitOk;
  } catch (const ParseError& e) {
    err << e.diagnostic().str() << "\n";
    return kExitInput;
  } catch (const CheckError& e) {
    for (const auto& d : e.diagnostics()) err << d.str() << "\n";
    return kExitInput;
  } catch (const GroundError& e) {
    err << a.ruleFile << ":" << e.what() << "\n";
    return kExitInput;
  } catch (const TypeError& e) {
    err << a.ruleFile << ": " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    err << "psgrnd: internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}

int asppsMain(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  AsppsArgs a;
  try {
    a = parseAsppsArgs(args);
  } catch (const UsageError& e) {
    err << "aspps: " << e.what() << "\n" << kAsppsUsage;
    return kExitUsage;
  }

  try {
    auto text = readFile(a.theoryFile);
    if (!text) {
      err << "aspps: cannot read " << a.theoryFile << "\n";
      return kExitInput;
    }
    GroundTheory gt;
    try {
      gt = readTdc(*text);
    } catch (const FormatError& e) {
      err << a.theoryFile << ":" << e.line() << ": " << e.what() << "\n";
      return kExitInput;
    }
    if (a.printTheory) {
      out << printTheory(gt);
      return kExitOk;
    }

    const bool printing = a.printAtoms || a.showPred.has_value();
    std::optional<std::string_view> filter;
    if (a.showPred) {
      filter = *a.showPred;
      // Warn once, not per model.
      (void)printModel(Assignment(static_cast<std::size_t>(gt.numAtoms()) + 1, false), gt, filter,
                       &err);
    }

    Solver solver(gt);
    SolveOptions options{a.countModels, a.maxModels};
    std::uint64_t index = 0;
    const SolveStatus status = solver.solve(options, [&](const Assignment& m) {
      ++index;
      if (printing) {
        if (a.countModels) out << "Model " << index << ":\n";
        out << printModel(m, gt, filter);
      }
      return true;
    });

    if (status == SolveStatus::Unsat || !printing) out << toString(status) << "\n";
    if (a.countModels) out << "models=" << solver.stats().modelsFound << "\n";
    try {
      recordStats(solver.stats(), a.theoryFile, status);
    } catch (const Error& e) {
      err << "aspps: " << e.what() << "\n";
      return kExitInternal;
    }
    return kExitOk;
  } catch (const std::exception& e) {
    err << "aspps: internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}

}  // namespace aspps
