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

#include <gtest/gtest.h>

#include <random>

#include "aspps/database.hpp"
#include "aspps/error.hpp"
#include "aspps/grounder.hpp"
#include "aspps/parser.hpp"
#include "aspps/solver.hpp"
#include "aspps/tdc.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

namespace aspps {
namespace {

Term k(std::int64_t v) { return Term::constant(Constant(v)); }
Term v(const char* n) { return Term::var(n); }
Constant sym(const char* n) { return Constant::symbol(n); }

std::vector<Diagnostic> check(std::string_view rules, std::string_view data) {
  return checkProgram(parseRuleFile(rules, {}), buildDatabase(parseDataFile(data, {})), "r.rl");
}

bool mentions(const std::vector<Diagnostic>& ds, std::string_view text) {
  for (const auto& d : ds) {
    if (d.message.find(text) != std::string::npos) return true;
  }
  return false;
}

constexpr std::string_view kColorData = "vtx[1..3]. color(r). color(g). color(b).\n";

TEST(CheckProgram, ArityError) {
  auto ds = check("pred clr(vtx,color). var vtx X.\nvtx(X) -> clr(X).", kColorData);
  ASSERT_FALSE(ds.empty());
  EXPECT_EQ(ds[0].line, 2);
  EXPECT_NE(ds[0].message.find("clr"), std::string::npos);
}

TEST(CheckProgram, UndeclaredVariable) {
  // The parser rejects undeclared variables early; the checker does too.
  Program p = parseRuleFile("pred a(vtx). var vtx X.\n-> a(X).", {});
  std::get<PlainAtom>(p.clauses[0].head[0]).args[0] = v("Z");
  auto ds = checkProgram(p, buildDatabase(parseDataFile(kColorData, {})));
  EXPECT_TRUE(mentions(ds, "variable Z not declared"));
}

TEST(CheckProgram, WellTypedColoring) {
  EXPECT_TRUE(check(testing::kColorRules, testing::kTriangleData.substr(0, 10)).empty());
  EXPECT_TRUE(check(testing::kColorRules, kColorData).empty());
}

TEST(CheckProgram, OtherViolations) {
  // Type predicate with a non-unary extension.
  EXPECT_FALSE(check("pred p(edge). var vtx X.\nvtx(X) -> p(X).", "vtx(1). edge(1,2).").empty());
  // Restriction arity.
  EXPECT_FALSE(check("pred p(vtx,vtx): vtx. var vtx X.\n-> p(X,X).", "vtx(1).").empty());
  // Program predicate also given as data.
  EXPECT_FALSE(check("pred vtx(vtx). var vtx X.\n-> vtx(X).", "vtx(1).").empty());
  // Program predicate in a c-atom condition.
  EXPECT_FALSE(
      check("pred p(vtx). pred q(vtx). var vtx X.\n-> {p(X) : q(X)} 1.", "vtx(1).").empty());
  // Comparison with the wrong operand count.
  Program p = parseRuleFile("pred a(vtx). var vtx X.\nX < 2 -> a(X).", {});
  std::get<PlainAtom>(p.clauses[0].body[0]).args.push_back(k(3));
  EXPECT_FALSE(checkProgram(p, buildDatabase(parseDataFile("vtx(1).", {}))).empty());
  // Symbolic c-atom bound.
  EXPECT_FALSE(check("pred a(vtx). var vtx X.\n-> lo {a(X) : vtx(X)}.", "vtx(1).").empty());
}

TEST(CheckProgram, EmptyTypeExtensionIsLegal) {
  EXPECT_TRUE(check("pred a(vtx). var vtx X.\nvtx(X) -> a(X).", "other(1).").empty());
}

TEST(EvalArith, Examples) {
  EXPECT_EQ(evalArith(Term::arith(ArithOp::Abs, {k(-3)}), {}), 3);
  EXPECT_EQ(evalArith(Term::arith(ArithOp::Mod, {k(7), k(2)}), {}), 1);
  EXPECT_EQ(evalArith(Term::arith(ArithOp::Max, {k(2), k(5)}), {}), 5);
}

TEST(EvalArith, BasicOperators) {
  const Binding b{{"X", Constant(7)}, {"Y", Constant(3)}};
  EXPECT_EQ(evalArith(Term::arith(ArithOp::Add, {v("X"), v("Y")}), b), 10);
  EXPECT_EQ(evalArith(Term::arith(ArithOp::Sub, {v("Y"), v("X")}), b), -4);
  EXPECT_EQ(evalArith(Term::arith(ArithOp::Mul, {v("X"), k(-2)}), b), -14);
  EXPECT_EQ(evalArith(Term::arith(ArithOp::Div, {v("X"), v("Y")}), b), 2);
  EXPECT_EQ(evalTerm(Term::arith(ArithOp::Sub, {k(INT64_MIN + 1), k(1)}), {}), Constant(INT64_MIN));
}

TEST(EvalArith, TruncatingDivision) {
  EXPECT_EQ(evalArith(Term::arith(ArithOp::Div, {k(-7), k(2)}), {}), -3);
  EXPECT_EQ(evalArith(Term::arith(ArithOp::Mod, {k(-7), k(2)}), {}), -1);
  EXPECT_EQ(evalArith(Term::arith(ArithOp::Mod, {k(7), k(-2)}), {}), 1);
  EXPECT_EQ(evalArith(Term::arith(ArithOp::Min, {v("X"), k(2)}), {{"X", Constant(-4)}}), -4);
}

TEST(EvalArith, Errors) {
  EXPECT_THROW(evalArith(Term::arith(ArithOp::Div, {k(1), k(0)}), {}), GroundError);
  EXPECT_THROW(evalArith(Term::arith(ArithOp::Mod, {k(1), k(0)}), {}), GroundError);
  EXPECT_THROW(evalArith(Term::arith(ArithOp::Add, {k(INT64_MAX), k(1)}), {}), GroundError);
  EXPECT_THROW(evalArith(Term::arith(ArithOp::Mul, {k(INT64_MAX), k(2)}), {}), GroundError);
  EXPECT_THROW(evalArith(Term::arith(ArithOp::Abs, {k(INT64_MIN)}), {}), GroundError);
  EXPECT_THROW(evalArith(Term::arith(ArithOp::Add, {Term::constant(sym("r")), k(1)}), {}),
               GroundError);
}

TEST(EvalPredefined, Examples) {
  EXPECT_TRUE(evalPredefined({"<=", {k(2), k(3)}}, {}));
  EXPECT_TRUE(evalPredefined({"==", {v("X"), Term::arith(ArithOp::Add, {v("X"), k(0)})}},
                             {{"X", Constant(5)}}));
  EXPECT_FALSE(evalPredefined({"==", {Term::constant(sym("r")), Term::constant(sym("g"))}}, {}));
  EXPECT_THROW(evalPredefined({"<", {Term::constant(sym("r")), Term::constant(sym("g"))}}, {}),
               GroundError);
  EXPECT_FALSE(evalPredefined({"==", {Term::constant(sym("r")), k(1)}}, {}));
}

class GrounderOps : public ::testing::Test {
 protected:
  Program prog = parseRuleFile(R"(pred clr(vtx,color). pred q(vtx,vtx): link.
pred p(vtx,color). pred a(vtx). pred b(vtx). pred pd(d).
var vtx X, Y. var color C. var d Z.
)",
                               {});
  DataDatabase db = buildDatabase(parseDataFile(
      "vtx[1..3]. color(r). color(g). color(b). link(1,3). d[1..3]. edge(1,2).", {}));
  Grounder g{prog, db};

  std::vector<std::string> memberTexts(const Resolved& r) {
    std::vector<std::string> out;
    for (Lit m : g.provisionalCard(r.id).members) out.push_back(g.provisionalAtom(m).text);
    return out;
  }
};

TEST_F(GrounderOps, ResolveProgramAtom) {
  auto id = g.resolveProgramAtom({"clr", {k(1), Term::constant(sym("r"))}}, {});
  ASSERT_TRUE(id.has_value());
  EXPECT_EQ(g.provisionalAtom(*id).text, "clr(1,r)");
  EXPECT_EQ(g.resolveProgramAtom({"clr", {v("X"), v("C")}}, {{"X", 1}, {"C", sym("r")}}), id);
  EXPECT_FALSE(g.resolveProgramAtom({"clr", {k(9), Term::constant(sym("r"))}}, {}));
  EXPECT_FALSE(g.resolveProgramAtom({"q", {k(1), k(2)}}, {}));
  EXPECT_TRUE(g.resolveProgramAtom({"q", {k(1), k(3)}}, {}));
  EXPECT_TRUE(g.resolveProgramAtom({"a", {Term::arith(ArithOp::Add, {k(1), k(1)})}}, {}));
}

TEST_F(GrounderOps, EAtom) {
  auto r = g.instantiateEAtom({"p", {k(1), v("C")}, "C", "color"}, {});
  ASSERT_EQ(r.kind, Resolved::Kind::Card);
  EXPECT_EQ(g.provisionalCard(r.id).lo, 1);
  EXPECT_EQ(g.provisionalCard(r.id).hi, kUnbounded);
  EXPECT_EQ(memberTexts(r), (std::vector<std::string>{"p(1,b)", "p(1,g)", "p(1,r)"}));
  EXPECT_EQ(g.instantiateEAtom({"p", {k(1), v("C")}, "C", "nothing"}, {}),
            Resolved::constant(false));
  auto one = g.instantiateEAtom({"q", {k(1), v("Y")}, "Y", "vtx"}, {});
  ASSERT_EQ(one.kind, Resolved::Kind::Card);
  EXPECT_EQ(memberTexts(one), (std::vector<std::string>{"q(1,3)"}));
}

TEST_F(GrounderOps, CAtomSchema) {
  auto r = g.instantiateCAtom(
      CAtomSchema{Constant(1), {"clr", {k(1), v("C")}}, {{"color", {v("C")}}}, Constant(1)}, {});
  ASSERT_EQ(r.kind, Resolved::Kind::Card);
  EXPECT_EQ(g.provisionalCard(r.id).lo, 1);
  EXPECT_EQ(g.provisionalCard(r.id).hi, 1);
  EXPECT_EQ(memberTexts(r).size(), 3u);
}

TEST_F(GrounderOps, CAtomList) {
  auto r = g.instantiateCAtom(CAtomList{Constant(2), {"a", "b"}, {k(1)}, Constant(2)}, {});
  ASSERT_EQ(r.kind, Resolved::Kind::Card);
  EXPECT_EQ(memberTexts(r), (std::vector<std::string>{"a(1)", "b(1)"}));
  EXPECT_EQ(g.provisionalCard(r.id).lo, 2);
  EXPECT_EQ(g.provisionalCard(r.id).hi, 2);
}

TEST_F(GrounderOps, CAtomPredefinedConditionFilters) {
  auto r = g.instantiateCAtom(
      CAtomSchema{Constant(1), {"pd", {v("Z")}}, {{"d", {v("Z")}}, {"<", {v("Z"), k(2)}}}, {}},
      {});
  ASSERT_EQ(r.kind, Resolved::Kind::Card);
  EXPECT_EQ(memberTexts(r), (std::vector<std::string>{"pd(1)"}));
}

TEST_F(GrounderOps, CAtomFolding) {
  // Too few members for lo.
  EXPECT_EQ(g.instantiateCAtom(CAtomList{Constant(3), {"a", "b"}, {k(1)}, {}}, {}),
            Resolved::constant(false));
  // lo 0, no upper bound.
  EXPECT_EQ(g.instantiateCAtom(CAtomList{{}, {"a", "b"}, {k(1)}, {}}, {}),
            Resolved::constant(true));
  // hi above the member count clamps to it, which then folds.
  EXPECT_EQ(g.instantiateCAtom(CAtomList{Constant(0), {"a", "b"}, {k(1)}, Constant(7)}, {}),
            Resolved::constant(true));
  auto r = g.instantiateCAtom(CAtomList{Constant(1), {"a", "b"}, {k(1)}, Constant(7)}, {});
  ASSERT_EQ(r.kind, Resolved::Kind::Card);
  EXPECT_EQ(g.provisionalCard(r.id).hi, 2);
  // Empty member set.
  EXPECT_EQ(g.instantiateCAtom(CAtomList{Constant(1), {"a"}, {k(9)}, {}}, {}),
            Resolved::constant(false));
  // Structurally identical constructs share one id.
  EXPECT_EQ(g.instantiateCAtom(CAtomList{Constant(1), {"b", "a"}, {k(1)}, Constant(2)}, {}), r);
}

TEST_F(GrounderOps, GroundClauseDataTrue) {
  Clause c{{PlainAtom{"edge", {v("X"), v("Y")}}, PlainAtom{"clr", {v("X"), v("C")}},
            PlainAtom{"clr", {v("Y"), v("C")}}},
           {},
           {}};
  auto gc = g.groundClause(c, {{"X", 1}, {"Y", 2}, {"C", sym("r")}});
  ASSERT_TRUE(gc.has_value());
  ASSERT_EQ(gc->literals.size(), 2u);
  EXPECT_EQ(g.provisionalAtom(-gc->literals[0]).text, "clr(1,r)");
  EXPECT_EQ(g.provisionalAtom(-gc->literals[1]).text, "clr(2,r)");
  EXPECT_FALSE(g.groundClause(c, {{"X", 1}, {"Y", 3}, {"C", sym("r")}}).has_value());
}

TEST_F(GrounderOps, GroundClauseCardUnit) {
  Clause c{{},
           {CAtomSchema{Constant(1), {"clr", {k(1), v("C")}}, {{"color", {v("C")}}}, Constant(1)}},
           {}};
  auto gc = g.groundClause(c, {});
  ASSERT_TRUE(gc.has_value());
  ASSERT_EQ(gc->literals.size(), 1u);
  EXPECT_GE(gc->literals[0], Grounder::kCardBase);
}

TEST_F(GrounderOps, GroundClauseSimplification) {
  PlainAtom a1{"a", {k(1)}};
  // Tautology.
  EXPECT_FALSE(g.groundClause(Clause{{a1}, {a1}, {}}, {}).has_value());
  // Duplicates merge.
  auto dup = g.groundClause(Clause{{}, {a1, a1}, {}}, {});
  ASSERT_TRUE(dup.has_value());
  EXPECT_EQ(dup->literals.size(), 1u);
  // All literals false: the empty clause.
  auto empty = g.groundClause(Clause{{PlainAtom{"<", {k(1), k(2)}}}, {PlainAtom{"a", {k(9)}}}, {}}, {});
  ASSERT_TRUE(empty.has_value());
  EXPECT_TRUE(empty->literals.empty());
  // Head true.
  EXPECT_FALSE(g.groundClause(Clause{{a1}, {PlainAtom{"vtx", {k(2)}}}, {}}, {}).has_value());
}

TEST(GlobalVariables, LocalsStayInside) {
  Program p = parseRuleFile(R"(pred c(v,v). var v X, Y, Z, W.
c(X,Y):v(Y), v(X) -> 1 {c(X,Z) : v(Z)} 1 | {c(Z,W) : v(W)}.
)",
                            {});
  auto g = Grounder::globalVariables(p.clauses[0]);
  std::sort(g.begin(), g.end());
  EXPECT_EQ(g, (std::vector<std::string>{"X", "Z"}));
  Program q = parseRuleFile("pred c(v,v). var v X, Y, Z.\nv(X) -> 1 {c(X,Z) : v(Z)} 1.\n", {});
  EXPECT_EQ(Grounder::globalVariables(q.clauses[0]), (std::vector<std::string>{"X"}));
}

TEST(GroundTheory, TriangleColoring) {
  GroundTheory gt = testing::groundText(testing::kColorRules, testing::kTriangleData, {{"k", "3"}});
  EXPECT_EQ(gt.atoms.size(), 9u);
  EXPECT_EQ(gt.cards.size(), 3u);
  EXPECT_EQ(gt.clauses.size(), 12u);
  int units = 0;
  for (const auto& c : gt.clauses) {
    units += c.literals.size() == 1 && gt.isCard(c.literals[0]);
  }
  EXPECT_EQ(units, 3);
  for (const auto& card : gt.cards) {
    EXPECT_EQ(card.lo, 1);
    EXPECT_EQ(card.hi, 1);
    EXPECT_EQ(card.members.size(), 3u);
  }
}

TEST(GroundTheory, NoClauses) {
  GroundTheory gt = testing::groundText("pred a(d).\n", "d(1).");
  EXPECT_TRUE(gt.atoms.empty());
  EXPECT_TRUE(gt.clauses.empty());
}

TEST(GroundTheory, EmptyDomain) {
  GroundTheory gt = testing::groundText("pred a(d). var d X.\n-> a(X).", "e(1).");
  EXPECT_TRUE(gt.clauses.empty());
}

TEST(GroundTheory, EmptyClauseKept) {
  GroundTheory gt = testing::groundText("pred a(d).\n-> 2 {a(1), a(1)}.\n-> a(1).", "d(1).");
  EXPECT_TRUE(gt.hasEmptyClause());
  EXPECT_EQ(gt.clauses.size(), 2u);
}

TEST(GroundTheory, ErrorsCarryPosition) {
  try {
    testing::groundText("pred a(d). var d X.\nd(X) -> a(X/0).", "d(1).");
    FAIL();
  } catch (const GroundError& e) {
    EXPECT_NE(std::string(e.what()).find("2:"), std::string::npos);
  }
  EXPECT_THROW(testing::groundText("var d X. var e Y.\nd(X), e(Y), X < Y -> .", "d(1). e(a)."),
               GroundError);
  EXPECT_THROW(testing::groundText("pred a(d). var d X.\n-> a(X,X).", "d(1)."), CheckError);
  // An undeclared predicate is a data predicate, false under the closed world.
  EXPECT_TRUE(testing::groundText("pred a(d). var d X.\n-> b(X).", "d(1).").hasEmptyClause());
}

TEST(GroundTheory, OracleEquivalence) {
  std::mt19937_64 rng(101);
  for (int i = 0; i < 300; ++i) {
    auto t = testing::randomMicroTheory(rng);
    auto db = buildDatabase(t.data);
    ASSERT_TRUE(checkProgram(t.program, db).empty()) << toString(t.program);
    GroundTheory gt = groundTheory(t.program, db);
    EXPECT_EQ(testing::normalize(gt), testing::naiveGround(t.program, db)) << toString(t.program);
  }
}

TEST(GroundTheory, AtomsPassTypesAndRestrictions) {
  std::mt19937_64 rng(102);
  for (int i = 0; i < 200; ++i) {
    auto t = testing::randomMicroTheory(rng);
    auto db = buildDatabase(t.data);
    GroundTheory gt = groundTheory(t.program, db);
    for (const auto& a : gt.atoms) {
      const PredDecl* d = t.program.findPred(a.pred);
      ASSERT_NE(d, nullptr);
      for (std::size_t j = 0; j < a.args.size(); ++j) {
        EXPECT_TRUE(db.contains(d->argTypes[j], std::span(&a.args[j], 1)));
      }
      if (d->restriction) EXPECT_TRUE(db.contains(*d->restriction, a.args));
      EXPECT_EQ(a.text, atomText(a.pred, a.args));
    }
  }
}

TEST(GroundTheory, Deterministic) {
  std::mt19937_64 rng(103);
  for (int i = 0; i < 100; ++i) {
    auto t = testing::randomMicroTheory(rng);
    auto db1 = buildDatabase(t.data);
    auto db2 = buildDatabase(t.data);
    EXPECT_EQ(writeTdc(groundTheory(t.program, db1)), writeTdc(groundTheory(t.program, db2)));
  }
}

TEST(GroundTheory, ModelPreservation) {
  std::mt19937_64 rng(104);
  int checked = 0;
  for (int i = 0; i < 400 && checked < 120; ++i) {
    auto t = testing::randomMicroTheory(rng);
    auto db = buildDatabase(t.data);
    GroundTheory gt = groundTheory(t.program, db);
    if (gt.numAtoms() > 10) continue;
    ++checked;
    std::set<std::set<std::string>> expected;
    const auto n = static_cast<std::size_t>(gt.numAtoms());
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      std::set<std::string> on;
      for (std::size_t j = 0; j < n; ++j) {
        if ((mask >> j) & 1) on.insert(gt.atoms[j].text);
      }
      if (testing::satisfiesDirectly(t.program, db, on)) expected.insert(on);
    }
    std::set<std::set<std::string>> found;
    for (const auto& m : solve(gt, {true, std::nullopt}).models) {
      std::set<std::string> on;
      for (const auto& a : gt.atoms) {
        if (m[static_cast<std::size_t>(a.id)]) on.insert(a.text);
      }
      found.insert(on);
    }
    EXPECT_EQ(found, expected) << toString(t.program);
  }
  EXPECT_GE(checked, 50);
}

TEST(OutputName, Examples) {
  std::vector<std::string> d1{"graph.dt"};
  EXPECT_EQ(outputName({{"k", "3"}}, "color.rl", d1), "k=3-color-graph.tdc");
  std::vector<std::string> d2{"b.dt", "c.dt"};
  EXPECT_EQ(outputName({}, "a.rl", d2), "a-b-c.tdc");
  std::vector<std::string> d3{"d.dt"};
  EXPECT_EQ(outputName({{"k", "3"}, {"m", "2"}}, "q.rl", d3), "k=3-m=2-q-d.tdc");
  std::vector<std::string> d4{"../data/g.tar.dt"};
  EXPECT_EQ(outputName({}, "dir/r.rl", d4), "r-g.tar.tdc");
}

}  // namespace
}  // namespace aspps
