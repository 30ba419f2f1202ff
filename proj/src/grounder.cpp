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

#include "aspps/grounder.hpp"

#include <algorithm>
#include <filesystem>
#include <functional>
#include <limits>
#include <set>

namespace aspps {

std::string atomText(const std::string& pred, const Tuple& args) {
  return args.empty() ? pred : pred + "(" + toString(args) + ")";
}

bool GroundTheory::hasEmptyClause() const {
  return std::any_of(clauses.begin(), clauses.end(),
                     [](const GroundClause& c) { return c.literals.empty(); });
}

// ---------------------------------------------------------------------------
// Evaluation

namespace {

void checkOverflow(bool overflow) {
  if (overflow) throw GroundError("integer overflow in arithmetic");
}

std::int64_t intOf(const Constant& c) {
  if (!c.isInt()) throw GroundError("symbolic constant " + c.name() + " used in arithmetic");
  return c.intValue();
}

}  // namespace

std::int64_t evalArith(const Term& t, const Binding& binding) {
  if (t.isConstant()) return intOf(t.asConstant());
  if (t.isVariable()) {
    auto it = binding.find(t.asVariable().name);
    if (it == binding.end()) throw GroundError("unbound variable " + t.asVariable().name);
    return intOf(it->second);
  }
  const auto& e = t.asArith();
  if (static_cast<int>(e.operands.size()) != arity(e.op)) {
    throw GroundError("wrong number of operands for " + std::string(spelling(e.op)));
  }
  const std::int64_t a = evalArith(e.operands[0], binding);
  if (e.op == ArithOp::Abs) {
    if (a == std::numeric_limits<std::int64_t>::min()) throw GroundError("integer overflow in abs");
    return a < 0 ? -a : a;
  }
  const std::int64_t b = evalArith(e.operands[1], binding);
  std::int64_t r = 0;
  switch (e.op) {
    case ArithOp::Add:
      checkOverflow(__builtin_add_overflow(a, b, &r));
      return r;
    case ArithOp::Sub:
      checkOverflow(__builtin_sub_overflow(a, b, &r));
      return r;
    case ArithOp::Mul:
      checkOverflow(__builtin_mul_overflow(a, b, &r));
      return r;
    case ArithOp::Div:
    case ArithOp::Mod:
      if (b == 0) throw GroundError(e.op == ArithOp::Div ? "division by zero" : "mod by zero");
      if (a == std::numeric_limits<std::int64_t>::min() && b == -1) {
        if (e.op == ArithOp::Mod) return 0;
        throw GroundError("integer overflow in division");
      }
      return e.op == ArithOp::Div ? a / b : a % b;
    case ArithOp::Max: return std::max(a, b);
    case ArithOp::Min: return std::min(a, b);
    case ArithOp::Abs: break;
  }
  throw GroundError("unknown arithmetic operator");
}

Constant evalTerm(const Term& t, const Binding& binding) {
  if (t.isConstant()) return t.asConstant();
  if (t.isVariable()) {
    auto it = binding.find(t.asVariable().name);
    if (it == binding.end()) throw GroundError("unbound variable " + t.asVariable().name);
    return it->second;
  }
  return Constant(evalArith(t, binding));
}

bool evalPredefined(const PlainAtom& a, const Binding& binding) {
  if (a.args.size() != 2) throw GroundError("comparison " + a.pred + " needs two operands");
  const Constant lhs = evalTerm(a.args[0], binding);
  const Constant rhs = evalTerm(a.args[1], binding);
  if (a.pred == "==") return lhs == rhs;
  if (!lhs.isInt() || !rhs.isInt()) {
    throw GroundError("cannot order symbolic constants with " + a.pred + " in " +
                      lhs.str() + " " + a.pred + " " + rhs.str());
  }
  const std::int64_t x = lhs.intValue();
  const std::int64_t y = rhs.intValue();
  if (a.pred == "<=") return x <= y;
  if (a.pred == ">=") return x >= y;
  if (a.pred == "<") return x < y;
  if (a.pred == ">") return x > y;
  throw GroundError("unknown comparison " + a.pred);
}

// ---------------------------------------------------------------------------
// Type checking

namespace {

class Checker {
 public:
  Checker(const Program& prog, const DataDatabase& db, std::string_view file)
      : prog_(prog), db_(db), file_(file) {}

  std::vector<Diagnostic> run() {
    for (const auto& d : prog_.predDecls) predDecl(d);
    for (const auto& d : prog_.varDecls) {
      for (const auto& v : d.varNames) {
        if (!seenVars_.insert(v).second) report(d.pos, "variable " + v + " declared twice");
      }
      typePred(d.typePred, d.pos);
    }
    for (const auto& c : prog_.clauses) clause(c);
    return std::move(diags_);
  }

 private:
  void report(SourcePos pos, std::string msg) {
    diags_.push_back(Diagnostic{file_, pos.line, pos.column, std::move(msg)});
  }

  bool isProgram(std::string_view name) const { return prog_.findPred(name) != nullptr; }

  void typePred(const std::string& name, SourcePos pos) {
    if (isProgram(name)) {
      report(pos, "type " + name + " is a program predicate, not a data predicate");
      return;
    }
    try {
      (void)db_.unaryDomain(name);
    } catch (const TypeError& e) {
      report(pos, e.what());
    }
  }

  void predDecl(const PredDecl& d) {
    if (std::count_if(prog_.predDecls.begin(), prog_.predDecls.end(),
                      [&](const PredDecl& o) { return o.name == d.name; }) > 1 &&
        prog_.findPred(d.name) == &d) {
      report(d.pos, "predicate " + d.name + " declared more than once");
    }
    if (db_.hasPredicate(d.name)) {
      report(d.pos, "predicate " + d.name + " is declared as a program predicate but occurs in data");
    }
    for (const auto& t : d.argTypes) typePred(t, d.pos);
    if (d.restriction) {
      const std::string& r = *d.restriction;
      if (isProgram(r)) {
        report(d.pos, "restriction " + r + " is a program predicate, not a data predicate");
      } else {
        auto ar = db_.arities(r);
        if (!ar.empty() && std::find(ar.begin(), ar.end(), d.argTypes.size()) == ar.end()) {
          report(d.pos, "restriction " + r + " has arity " + std::to_string(ar.front()) +
                            ", expected " + std::to_string(d.argTypes.size()));
        }
      }
    }
  }

  void term(const Term& t, SourcePos pos) {
    if (t.isVariable()) {
      const auto& n = t.asVariable().name;
      if (!prog_.varType(n)) report(pos, "variable " + n + " not declared");
    } else if (t.isArith()) {
      const auto& e = t.asArith();
      if (static_cast<int>(e.operands.size()) != arity(e.op)) {
        report(pos, "function " + std::string(spelling(e.op)) + " takes " +
                        std::to_string(arity(e.op)) + " operand(s)");
      }
      for (const auto& o : e.operands) term(o, pos);
    }
  }

  void programAtom(const std::string& pred, std::size_t nargs, SourcePos pos,
                   std::string_view context) {
    const PredDecl* d = prog_.findPred(pred);
    if (!d) {
      report(pos, std::string(context) + " " + pred + " is not a declared program predicate");
      return;
    }
    if (d->argTypes.size() != nargs) {
      report(pos, "predicate " + pred + " has arity " + std::to_string(d->argTypes.size()) +
                      " but is used with " + std::to_string(nargs) + " argument(s)");
    }
  }

  void plain(const PlainAtom& a, SourcePos pos) {
    for (const auto& t : a.args) term(t, pos);
    if (isComparison(a.pred)) {
      if (a.args.size() != 2) report(pos, "comparison " + a.pred + " takes two operands");
      return;
    }
    if (isProgram(a.pred)) programAtom(a.pred, a.args.size(), pos, "predicate");
  }

  void bound(const Bound& b, SourcePos pos) {
    if (!b) return;
    if (!b->isInt()) {
      report(pos, "cardinality bound " + b->name() + " is not an integer");
    } else if (b->intValue() < 0) {
      report(pos, "cardinality bound " + b->str() + " is negative");
    }
  }

  void clause(const Clause& c) {
    const SourcePos pos = c.pos;
    auto visit = [&](const Atom& a) {
      if (const auto* p = std::get_if<PlainAtom>(&a)) {
        plain(*p, pos);
      } else if (const auto* e = std::get_if<EAtom>(&a)) {
        for (const auto& t : e->args) term(t, pos);
        programAtom(e->pred, e->args.size(), pos, "e-atom predicate");
        if (!prog_.varType(e->boundVar)) report(pos, "variable " + e->boundVar + " not declared");
        if (isProgram(e->domainPred)) {
          report(pos, "e-atom domain " + e->domainPred + " must be a data predicate");
        } else {
          typePred(e->domainPred, pos);
        }
        if (e->args.empty() || !e->args.back().isVariable() ||
            e->args.back().asVariable().name != e->boundVar) {
          report(pos, "the bound variable " + e->boundVar + " must be the last argument of " +
                          e->pred);
        }
      } else if (const auto* s = std::get_if<CAtomSchema>(&a)) {
        for (const auto& t : s->member.args) term(t, pos);
        programAtom(s->member.pred, s->member.args.size(), pos, "c-atom member");
        for (const auto& d : s->conds) {
          plain(d, pos);
          if (isProgram(d.pred)) {
            report(pos, "c-atom condition " + d.pred + " must be a data or predefined predicate");
          }
        }
        bound(s->lo, pos);
        bound(s->hi, pos);
        loHi(s->lo, s->hi, pos);
      } else if (const auto* l = std::get_if<CAtomList>(&a)) {
        for (const auto& t : l->args) term(t, pos);
        for (const auto& p : l->preds) programAtom(p, l->args.size(), pos, "c-atom member");
        bound(l->lo, pos);
        bound(l->hi, pos);
        loHi(l->lo, l->hi, pos);
      }
    };
    for (const auto& a : c.body) visit(a);
    for (const auto& a : c.head) visit(a);

    // An e-atom's bound variable belongs to that e-atom alone.
    std::vector<std::string> elsewhere;
    std::vector<std::string> bound;
    auto scan = [&](const Atom& a) {
      if (const auto* e = std::get_if<EAtom>(&a)) {
        for (std::size_t i = 0; i + 1 < e->args.size(); ++i) collectVariables(e->args[i], elsewhere);
        bound.push_back(e->boundVar);
      } else if (const auto* p = std::get_if<PlainAtom>(&a)) {
        collectVariables(*p, elsewhere);
      } else if (const auto* s = std::get_if<CAtomSchema>(&a)) {
        collectVariables(s->member, elsewhere);
        for (const auto& d : s->conds) collectVariables(d, elsewhere);
      } else if (const auto* l = std::get_if<CAtomList>(&a)) {
        for (const auto& t : l->args) collectVariables(t, elsewhere);
      }
    };
    for (const auto& a : c.body) scan(a);
    for (const auto& a : c.head) scan(a);
    for (std::size_t i = 0; i < bound.size(); ++i) {
      const bool twice = std::count(bound.begin(), bound.end(), bound[i]) > 1;
      const bool outside =
          std::find(elsewhere.begin(), elsewhere.end(), bound[i]) != elsewhere.end();
      if (twice || outside) {
        report(pos, "bound variable " + bound[i] + " of an e-atom occurs elsewhere in the clause");
      }
    }
  }

  void loHi(const Bound& lo, const Bound& hi, SourcePos pos) {
    if (lo && hi && lo->isInt() && hi->isInt() && lo->intValue() > hi->intValue()) {
      report(pos, "lower bound " + lo->str() + " exceeds upper bound " + hi->str());
    }
  }

  const Program& prog_;
  const DataDatabase& db_;
  std::string file_;
  std::set<std::string> seenVars_;
  std::vector<Diagnostic> diags_;
};

}  // namespace

std::vector<Diagnostic> checkProgram(const Program& prog, const DataDatabase& db,
                                     std::string_view file) {
  return Checker(prog, db, file).run();
}

// ---------------------------------------------------------------------------
// Instantiation

namespace {

// A test run once all variables it mentions are bound. Enumeration of a
// branch stops as soon as a filter fails.
struct Filter {
  std::size_t depth = 0;
  std::function<bool(const Binding&)> keep;
};

// Number of leading entries of `vars` that must be bound before every
// variable of `atomVars` is bound. Variables outside `vars` count as bound.
std::size_t readyDepth(const std::vector<std::string>& atomVars,
                       const std::vector<std::string>& vars) {
  std::size_t depth = 0;
  for (const auto& v : atomVars) {
    auto it = std::find(vars.begin(), vars.end(), v);
    if (it != vars.end()) {
      depth = std::max(depth, static_cast<std::size_t>(it - vars.begin()) + 1);
    }
  }
  return depth;
}

void enumerate(const std::vector<std::string>& vars,
               const std::vector<std::vector<Constant>>& domains,
               const std::vector<std::vector<const Filter*>>& byDepth, Binding& binding,
               std::size_t k, const std::function<void(const Binding&)>& leaf) {
  for (const Filter* f : byDepth[k]) {
    if (!f->keep(binding)) return;
  }
  if (k == vars.size()) {
    leaf(binding);
    return;
  }
  for (const auto& value : domains[k]) {
    binding.insert_or_assign(vars[k], value);
    enumerate(vars, domains, byDepth, binding, k + 1, leaf);
  }
  binding.erase(vars[k]);
}

void enumerateWithFilters(const std::vector<std::string>& vars,
                          const std::vector<std::vector<Constant>>& domains,
                          const std::vector<Filter>& filters, Binding binding,
                          const std::function<void(const Binding&)>& leaf) {
  std::vector<std::vector<const Filter*>> byDepth(vars.size() + 1);
  for (const auto& f : filters) byDepth[f.depth].push_back(&f);
  enumerate(vars, domains, byDepth, binding, 0, leaf);
}

std::int64_t boundValue(const Bound& b, std::int64_t fallback) {
  if (!b) return fallback;
  if (!b->isInt()) throw GroundError("cardinality bound " + b->name() + " is not an integer");
  if (b->intValue() < 0) throw GroundError("cardinality bound " + b->str() + " is negative");
  return b->intValue();
}

}  // namespace

Grounder::Grounder(const Program& prog, const DataDatabase& db) : prog_(prog), db_(db) {}

std::vector<Constant> Grounder::domainOf(const std::string& var) const {
  const std::string* type = prog_.varType(var);
  if (!type) throw GroundError("variable " + var + " has no declared type");
  return db_.unaryDomain(*type);
}

std::optional<Lit> Grounder::resolveProgramAtom(const PlainAtom& a, const Binding& binding) {
  const PredDecl* decl = prog_.findPred(a.pred);
  if (!decl) throw GroundError(a.pred + " is not a program predicate");
  if (decl->argTypes.size() != a.args.size()) {
    throw GroundError("predicate " + a.pred + " used with the wrong number of arguments");
  }
  Tuple args;
  args.reserve(a.args.size());
  for (const auto& t : a.args) args.push_back(evalTerm(t, binding));
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (!db_.contains(decl->argTypes[i], std::span<const Constant>(&args[i], 1))) {
      return std::nullopt;
    }
  }
  if (decl->restriction && !db_.contains(*decl->restriction, args)) return std::nullopt;

  auto key = std::make_pair(a.pred, args);
  if (auto it = atomIds_.find(key); it != atomIds_.end()) return it->second;
  const Lit id = static_cast<Lit>(atoms_.size()) + 1;
  atoms_.push_back(GroundAtom{id, a.pred, args, atomText(a.pred, args)});
  atomIds_.emplace(std::move(key), id);
  return id;
}

Lit Grounder::internCard(std::int64_t lo, std::int64_t hi, std::vector<Lit> members) {
  auto key = std::make_tuple(lo, hi, members);
  if (auto it = cardIds_.find(key); it != cardIds_.end()) return it->second;
  const Lit id = kCardBase + static_cast<Lit>(cards_.size());
  cards_.push_back(CardConstruct{id, lo, hi, std::move(members)});
  cardIds_.emplace(std::move(key), id);
  return id;
}

Resolved Grounder::foldCard(std::int64_t lo, std::int64_t hi, std::vector<Lit> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  const auto size = static_cast<std::int64_t>(members.size());
  if (hi != kUnbounded && lo > hi) {
    throw GroundError("lower bound " + std::to_string(lo) + " exceeds upper bound " +
                      std::to_string(hi));
  }
  if (hi != kUnbounded && hi > size) hi = size;
  if (size < lo) return Resolved::constant(false);
  if (lo == 0 && (hi == kUnbounded || hi >= size)) return Resolved::constant(true);
  return Resolved{Resolved::Kind::Card, internCard(lo, hi, std::move(members))};
}

Resolved Grounder::instantiateEAtom(const EAtom& a, const Binding& binding) {
  if (prog_.findPred(a.domainPred)) {
    throw GroundError("e-atom domain " + a.domainPred + " is not a data predicate");
  }
  std::vector<Lit> members;
  Binding b = binding;
  PlainAtom atom{a.pred, a.args};
  for (const auto& y : db_.unaryDomain(a.domainPred)) {
    b.insert_or_assign(a.boundVar, y);
    if (auto id = resolveProgramAtom(atom, b)) members.push_back(*id);
  }
  return foldCard(1, kUnbounded, std::move(members));
}

Resolved Grounder::instantiateCAtom(const Atom& a, const Binding& binding) {
  if (const auto* list = std::get_if<CAtomList>(&a)) {
    const std::int64_t lo = boundValue(list->lo, 0);
    std::vector<Lit> members;
    for (const auto& p : list->preds) {
      if (auto id = resolveProgramAtom(PlainAtom{p, list->args}, binding)) members.push_back(*id);
    }
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    const std::int64_t hi =
        list->hi ? boundValue(list->hi, 0) : static_cast<std::int64_t>(kUnbounded);
    return foldCard(lo, hi, std::move(members));
  }
  const auto* schema = std::get_if<CAtomSchema>(&a);
  if (!schema) throw GroundError("not a c-atom: " + toString(a));

  const std::int64_t lo = boundValue(schema->lo, 0);
  const std::int64_t hi =
      schema->hi ? boundValue(schema->hi, 0) : static_cast<std::int64_t>(kUnbounded);
  if (hi != kUnbounded && lo > hi) {
    throw GroundError("lower bound " + std::to_string(lo) + " exceeds upper bound " +
                      std::to_string(hi));
  }

  std::vector<std::string> all;
  collectVariables(schema->member, all);
  for (const auto& d : schema->conds) collectVariables(d, all);
  std::vector<std::string> locals;
  for (const auto& v : all) {
    if (!binding.count(v)) locals.push_back(v);
  }
  std::vector<std::vector<Constant>> domains;
  for (const auto& v : locals) domains.push_back(domainOf(v));

  std::vector<Filter> filters;
  for (const auto& d : schema->conds) {
    std::vector<std::string> vars;
    collectVariables(d, vars);
    if (isComparison(d.pred)) {
      filters.push_back({readyDepth(vars, locals),
                         [&d](const Binding& b) { return evalPredefined(d, b); }});
    } else {
      if (prog_.findPred(d.pred)) {
        throw GroundError("c-atom condition " + d.pred + " is a program predicate");
      }
      filters.push_back({readyDepth(vars, locals), [this, &d](const Binding& b) {
                           Tuple args;
                           for (const auto& t : d.args) args.push_back(evalTerm(t, b));
                           return db_.contains(d.pred, args);
                         }});
    }
  }

  std::vector<Lit> members;
  enumerateWithFilters(locals, domains, filters, binding, [&](const Binding& b) {
    if (auto id = resolveProgramAtom(schema->member, b)) members.push_back(*id);
  });
  return foldCard(lo, hi, std::move(members));
}

Resolved Grounder::resolve(const Atom& a, const Binding& binding) {
  if (const auto* p = std::get_if<PlainAtom>(&a)) {
    if (isComparison(p->pred)) return Resolved::constant(evalPredefined(*p, binding));
    if (prog_.findPred(p->pred)) {
      auto id = resolveProgramAtom(*p, binding);
      return id ? Resolved{Resolved::Kind::Atom, *id} : Resolved::constant(false);
    }
    Tuple args;
    args.reserve(p->args.size());
    for (const auto& t : p->args) args.push_back(evalTerm(t, binding));
    return Resolved::constant(db_.contains(p->pred, args));
  }
  if (const auto* e = std::get_if<EAtom>(&a)) return instantiateEAtom(*e, binding);
  return instantiateCAtom(a, binding);
}

std::optional<GroundClause> Grounder::groundClause(const Clause& c, const Binding& binding) {
  GroundClause out;
  std::set<Lit> seen;
  // Returns false when the clause became satisfied.
  auto add = [&](const Atom& a, bool positive) {
    const Resolved r = resolve(a, binding);
    if (r.isConstant()) return (r.kind == Resolved::Kind::True) != positive;
    const Lit lit = positive ? r.id : -r.id;
    if (seen.count(-lit)) return false;
    if (seen.insert(lit).second) out.literals.push_back(lit);
    return true;
  };
  for (const auto& a : c.body) {
    if (!add(a, false)) return std::nullopt;
  }
  for (const auto& a : c.head) {
    if (!add(a, true)) return std::nullopt;
  }
  return out;
}

std::vector<std::string> Grounder::globalVariables(const Clause& c) {
  // Occurrence lists: variables outside any schema, and per schema.
  std::vector<std::string> outside;
  std::vector<std::vector<std::string>> schemas;
  std::vector<std::string> ordered;
  auto scan = [&](const Atom& a) {
    if (const auto* p = std::get_if<PlainAtom>(&a)) {
      collectVariables(*p, outside);
      collectVariables(*p, ordered);
    } else if (const auto* e = std::get_if<EAtom>(&a)) {
      for (std::size_t i = 0; i + 1 < e->args.size(); ++i) {
        collectVariables(e->args[i], outside);
        collectVariables(e->args[i], ordered);
      }
    } else if (const auto* s = std::get_if<CAtomSchema>(&a)) {
      std::vector<std::string> vars;
      collectVariables(s->member, vars);
      for (const auto& d : s->conds) collectVariables(d, vars);
      for (const auto& v : vars) collectVariables(Term::var(v), ordered);
      schemas.push_back(std::move(vars));
    } else if (const auto* l = std::get_if<CAtomList>(&a)) {
      for (const auto& t : l->args) {
        collectVariables(t, outside);
        collectVariables(t, ordered);
      }
    }
  };
  for (const auto& a : c.body) scan(a);
  for (const auto& a : c.head) scan(a);

  std::vector<std::string> globals;
  for (const auto& v : ordered) {
    bool global = std::find(outside.begin(), outside.end(), v) != outside.end();
    if (!global) {
      int schemasWithV = 0;
      for (const auto& s : schemas) schemasWithV += std::find(s.begin(), s.end(), v) != s.end();
      global = schemasWithV > 1;
    }
    if (global) globals.push_back(v);
  }
  return globals;
}

void Grounder::groundAll() {
  for (const auto& c : prog_.clauses) {
    const auto vars = globalVariables(c);
    std::vector<std::vector<Constant>> domains;
    domains.reserve(vars.size());
    for (const auto& v : vars) domains.push_back(domainOf(v));

    // Data and comparison atoms prune bindings as soon as they are ground.
    std::vector<Filter> filters;
    auto addFilters = [&](const std::vector<Atom>& atoms, bool keepWhen) {
      for (const auto& a : atoms) {
        const auto* p = std::get_if<PlainAtom>(&a);
        if (!p || prog_.findPred(p->pred)) continue;
        std::vector<std::string> atomVars;
        collectVariables(*p, atomVars);
        if (isComparison(p->pred)) {
          filters.push_back({readyDepth(atomVars, vars), [p, keepWhen](const Binding& b) {
                               return evalPredefined(*p, b) == keepWhen;
                             }});
        } else {
          filters.push_back({readyDepth(atomVars, vars), [this, p, keepWhen](const Binding& b) {
                               Tuple args;
                               for (const auto& t : p->args) args.push_back(evalTerm(t, b));
                               return db_.contains(p->pred, args) == keepWhen;
                             }});
        }
      }
    };
    addFilters(c.body, true);
    addFilters(c.head, false);

    try {
      enumerateWithFilters(vars, domains, filters, Binding{}, [&](const Binding& b) {
        if (auto gc = groundClause(c, b)) clauses_.push_back(std::move(*gc));
      });
    } catch (const Error& e) {
      throw GroundError(std::to_string(c.pos.line) + ":" + std::to_string(c.pos.column) + ": " +
                        e.what());
    }
  }
}

GroundTheory Grounder::finish() const {
  // Keep what the clauses reference, in provisional order.
  std::vector<bool> atomUsed(atoms_.size() + 1, false);
  std::vector<bool> cardUsed(cards_.size(), false);
  for (const auto& c : clauses_) {
    for (Lit l : c.literals) {
      const Lit v = l < 0 ? -l : l;
      if (v >= kCardBase) {
        cardUsed[static_cast<std::size_t>(v - kCardBase)] = true;
      } else {
        atomUsed[static_cast<std::size_t>(v)] = true;
      }
    }
  }
  for (std::size_t i = 0; i < cards_.size(); ++i) {
    if (!cardUsed[i]) continue;
    for (Lit m : cards_[i].members) atomUsed[static_cast<std::size_t>(m)] = true;
  }

  GroundTheory gt;
  std::vector<Lit> atomMap(atoms_.size() + 1, 0);
  for (std::size_t i = 1; i <= atoms_.size(); ++i) {
    if (!atomUsed[i]) continue;
    GroundAtom a = atoms_[i - 1];
    a.id = static_cast<Lit>(gt.atoms.size()) + 1;
    atomMap[i] = a.id;
    gt.atoms.push_back(std::move(a));
  }
  std::vector<Lit> cardMap(cards_.size(), 0);
  for (std::size_t i = 0; i < cards_.size(); ++i) {
    if (!cardUsed[i]) continue;
    CardConstruct c = cards_[i];
    c.id = gt.numAtoms() + static_cast<Lit>(gt.cards.size()) + 1;
    for (Lit& m : c.members) m = atomMap[static_cast<std::size_t>(m)];
    cardMap[i] = c.id;
    gt.cards.push_back(std::move(c));
  }
  gt.clauses.reserve(clauses_.size());
  for (const auto& c : clauses_) {
    GroundClause out;
    out.literals.reserve(c.literals.size());
    for (Lit l : c.literals) {
      const Lit v = l < 0 ? -l : l;
      const Lit mapped = v >= kCardBase ? cardMap[static_cast<std::size_t>(v - kCardBase)]
                                        : atomMap[static_cast<std::size_t>(v)];
      out.literals.push_back(l < 0 ? -mapped : mapped);
    }
    gt.clauses.push_back(std::move(out));
  }
  return gt;
}

GroundTheory groundTheory(const Program& prog, const DataDatabase& db, std::string_view file) {
  if (auto diags = checkProgram(prog, db, file); !diags.empty()) {
    throw CheckError(std::move(diags));
  }
  Grounder g(prog, db);
  g.groundAll();
  return g.finish();
}

std::string outputName(const ConstantMap& consts, std::string_view ruleFile,
                       std::span<const std::string> dataFiles) {
  std::vector<std::string> parts;
  for (const auto& [name, value] : consts.entries()) parts.push_back(name + "=" + value);
  parts.push_back(std::filesystem::path(ruleFile).stem().string());
  for (const auto& d : dataFiles) parts.push_back(std::filesystem::path(d).stem().string());
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += '-';
    out += parts[i];
  }
  return out + ".tdc";
}

}  // namespace aspps
