// Copyright 2026 The seqalloc Authors.
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

// Compiles a restricted 3-CNF formula into a Best-Response instance in which
// agent "1" can reach the target utility iff the formula is satisfiable.
//
// Gadgets, per literal l of every variable x (l is x or negx):
//   agents  a_l^1, a_l^2
//   items   o_l^1, o_l^2          choice items
//           h_l^1, h_l^2, h_l^3   consistency items
//           d_l^11 .. d_l^22      dummy items
// and per clause c: o_c^1, o_c^2, o_c^3.
//
// The sequence is one 16-stage choice round per variable, one 3-stage clause
// round per clause and a collection round of |C| turns for agent 1. Agent 1
// sets x true by taking o_negx^1 and o_negx^2 in x's choice round.

#ifndef SEQALLOC_REDUCTION_HPP_
#define SEQALLOC_REDUCTION_HPP_

#include <optional>
#include <string>
#include <vector>

#include "seqalloc/formula.hpp"
#include "seqalloc/model.hpp"

namespace seqalloc::reduction {

enum class Role { kManipulator, kLiteralAgent, kClauseItem, kChoiceItem, kConsistencyItem, kDummyItem };

const char* role_name(Role role);

struct Gadget {
  std::string name;
  Role role;
  std::optional<Literal> literal;
  std::optional<std::size_t> clause;  // 0-based
  int copy = 0;                       // the superscript: 1, 2, 3, 11, 12, 21 or 22
};

// Names are deterministic, so lookups go through the instance's name index.
std::string literal_agent_name(Literal literal, int copy);
std::string choice_item_name(Literal literal, int copy);
std::string consistency_item_name(Literal literal, int copy);
std::string dummy_item_name(Literal literal, int copy);
std::string clause_item_name(std::size_t clause, int copy);

class GadgetRegistry {
 public:
  GadgetRegistry() = default;
  GadgetRegistry(std::vector<Gadget> agents, std::vector<Gadget> items)
      : agents_(std::move(agents)), items_(std::move(items)) {}

  const Gadget& agent(AgentId id) const { return agents_.at(id.index); }
  const Gadget& item(ItemId id) const { return items_.at(id.index); }
  const std::vector<Gadget>& agents() const { return agents_; }
  const std::vector<Gadget>& items() const { return items_; }

 private:
  std::vector<Gadget> agents_;
  std::vector<Gadget> items_;
};

enum class RoundKind { kChoice, kClause, kCollection };

struct Round {
  RoundKind kind;
  std::size_t index;  // variable - 1, clause index, or 0 for collection
  std::size_t begin;  // stage range [begin, end), 0-based
  std::size_t end;
};

struct ReductionOutput {
  RestrictedFormula formula;
  Instance instance;
  // Only agent 1 has utilities.
  UtilityProfile utilities;
  Rational target;
  GadgetRegistry registry;
  std::vector<Round> rounds;

  AgentId manipulator() const { return AgentId{0}; }
  AgentId agent(Literal literal, int copy) const;
  ItemId choice(Literal literal, int copy) const;
  ItemId consistency(Literal literal, int copy) const;
  ItemId dummy(Literal literal, int copy) const;
  ItemId clause_item(std::size_t clause, int copy) const;
};

ReductionOutput build_instance(const RestrictedFormula& formula);

// One named inequality of the utility construction, re-checked on the
// generated numbers.
struct LedgerCheck {
  std::string name;
  bool passed;
  std::string detail;
};

std::vector<LedgerCheck> audit_utilities(const ReductionOutput& out);

// Agent 1's four picks in a consistent choice round, in pick order.
std::vector<ItemId> consistent_quadruple(const ReductionOutput& out, std::uint32_t variable,
                                         bool value);

// Throws FormulaError if the assignment does not cover every variable.
Preference assignment_to_report(const ReductionOutput& out, const TruthAssignment& assignment);

struct ForwardResult {
  Preference report;
  Allocation allocation;
  Rational utility;
  bool meets_target;
  bool satisfies_formula;
  bool holds_all_clause_items;
};

ForwardResult verify_forward(const ReductionOutput& out, const TruthAssignment& assignment);

// How agent 1 spends its first two picks of a choice round.
enum class ChoicePattern {
  kTrue,                 // o_negx^1, o_negx^2
  kFalse,                // o_x^1, o_x^2
  kPositiveThenNegated,  // o_x^1, o_negx^2
  kNegatedThenPositive,  // o_negx^1, o_x^2
};

const char* pattern_name(ChoicePattern pattern);
bool is_consistent(ChoicePattern pattern);

// Report realizing one pattern per variable. Agent 1's later two picks of
// each round are whatever it gets by ranking that round's consistency items
// in true order; they are found by replaying round by round.
Preference pattern_report(const ReductionOutput& out, const std::vector<ChoicePattern>& patterns);

struct PatternOutcome {
  std::vector<ChoicePattern> patterns;
  Rational utility;
  bool meets_target;
  bool consistent;
  std::optional<TruthAssignment> assignment;  // set when consistent
  bool satisfies_formula;
  // Agent 1's consistency items per choice round.
  std::vector<Bundle> consistency_items;
};

struct PatternReport {
  std::vector<PatternOutcome> outcomes;
  // Every inconsistent round left agent 1 with exactly {h_x^2, h_negx^2}.
  bool inconsistent_rounds_ok;
  // meets_target <=> consistent and satisfying, for every outcome.
  bool target_iff_satisfying;
  bool satisfiable_by_patterns;
  bool satisfiable_by_enumeration;
  bool ok() const {
    return inconsistent_rounds_ok && target_iff_satisfying &&
           satisfiable_by_patterns == satisfiable_by_enumeration;
  }
};

// Enumerates all 4^|X| pattern combinations. Throws oracle::BudgetExceeded
// when |X| exceeds max_variables.
PatternReport verify_choice_patterns(const ReductionOutput& out, std::uint32_t max_variables = 8);

// JSON side file: every agent and item with its role, plus rounds and target.
std::string registry_json(const ReductionOutput& out);

}  // namespace seqalloc::reduction

#endif  // SEQALLOC_REDUCTION_HPP_
