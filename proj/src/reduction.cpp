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

#include "seqalloc/reduction.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "json.hpp"
#include "seqalloc/engine.hpp"
#include "seqalloc/oracle.hpp"

namespace seqalloc::reduction {

namespace {

// Positive and negative literal of a variable.
Literal pos(std::uint32_t v) { return Literal{v, true}; }
Literal neg(std::uint32_t v) { return Literal{v, false}; }

std::string sup(const std::string& base, int copy) { return base + "^" + std::to_string(copy); }

class Builder {
 public:
  explicit Builder(const RestrictedFormula& formula) : formula_(formula) {}

  ReductionOutput build() {
    add_items();
    add_agents();
    std::vector<Preference> profile;
    for (const Gadget& agent : agents_) profile.push_back(preference_of(agent));
    std::vector<AgentId> sequence = build_sequence();

    std::vector<std::string> item_names, agent_names;
    for (const Gadget& g : items_) item_names.push_back(g.name);
    for (const Gadget& g : agents_) agent_names.push_back(g.name);
    Instance instance = make_instance(std::move(item_names), std::move(agent_names),
                                      std::move(profile), std::move(sequence));

    UtilityProfile utilities(instance.num_agents(), instance.num_items());
    utilities.set(AgentId{0}, manipulator_utilities(instance));
    ReductionOutput out{formula_, std::move(instance), std::move(utilities), Rational(0),
                        GadgetRegistry(agents_, items_), rounds_};
    out.target = target_of(out);
    return out;
  }

 private:
  void add_item(Gadget g) {
    item_index_.emplace(g.name, static_cast<std::uint32_t>(items_.size()));
    items_.push_back(std::move(g));
  }

  void add_items() {
    for (std::size_t c = 0; c < formula_.clauses().size(); ++c) {
      for (int k = 1; k <= 3; ++k) {
        add_item({clause_item_name(c, k), Role::kClauseItem, std::nullopt, c, k});
      }
    }
    for (std::uint32_t v = 1; v <= formula_.num_variables(); ++v) {
      for (Literal l : {pos(v), neg(v)}) {
        for (int k : {1, 2}) add_item({choice_item_name(l, k), Role::kChoiceItem, l, {}, k});
        for (int k : {1, 2, 3}) {
          add_item({consistency_item_name(l, k), Role::kConsistencyItem, l, {}, k});
        }
        for (int k : {11, 12, 21, 22}) add_item({dummy_item_name(l, k), Role::kDummyItem, l, {}, k});
      }
    }
  }

  void add_agents() {
    agents_.push_back({"1", Role::kManipulator, std::nullopt, std::nullopt, 0});
    for (std::uint32_t v = 1; v <= formula_.num_variables(); ++v) {
      for (Literal l : {neg(v), pos(v)}) {
        for (int k : {1, 2}) {
          agent_index_.emplace(literal_agent_name(l, k), static_cast<std::uint32_t>(agents_.size()));
          agents_.push_back({literal_agent_name(l, k), Role::kLiteralAgent, l, {}, k});
        }
      }
    }
  }

  ItemId item(const std::string& name) const { return ItemId{item_index_.at(name)}; }
  AgentId agent(Literal l, int k) const { return AgentId{agent_index_.at(literal_agent_name(l, k))}; }

  // The listed items first (repeats dropped), then every other item in id order.
  Preference complete(const std::vector<std::string>& listed) const {
    Preference pref;
    std::unordered_set<std::uint32_t> seen;
    for (const std::string& name : listed) {
      const ItemId id = item(name);
      if (seen.insert(id.index).second) pref.push_back(id);
    }
    for (std::uint32_t i = 0; i < items_.size(); ++i) {
      if (!seen.contains(i)) pref.push_back(ItemId{i});
    }
    return pref;
  }

  std::vector<std::string> clause_tail(std::size_t clause) const {
    return {clause_item_name(clause, 3), clause_item_name(clause, 2), clause_item_name(clause, 1)};
  }

  Preference preference_of(const Gadget& agent) const {
    std::vector<std::string> listed;
    if (agent.role == Role::kManipulator) {
      for (std::uint32_t v = 1; v <= formula_.num_variables(); ++v) {
        const Literal x = pos(v), nx = neg(v);
        listed.insert(listed.end(),
                      {choice_item_name(x, 1), choice_item_name(nx, 1), choice_item_name(x, 2),
                       choice_item_name(nx, 2), consistency_item_name(nx, 1),
                       consistency_item_name(nx, 2), consistency_item_name(nx, 3),
                       consistency_item_name(x, 1), consistency_item_name(x, 2),
                       consistency_item_name(x, 3)});
      }
      for (std::size_t c = 0; c < formula_.clauses().size(); ++c) {
        listed.push_back(clause_item_name(c, 1));
      }
      return complete(listed);
    }

    // Agent a_m^k contends for the items of the opposite literal l, and in
    // the clause round for the k-th clause containing l.
    const Literal l = agent.literal->negated();
    const int k = agent.copy;
    auto o = [&](int c) { return choice_item_name(l, c); };
    auto h = [&](int c) { return consistency_item_name(l, c); };
    auto d = [&](int c) { return dummy_item_name(l, c); };
    if (l.positive) {
      if (k == 1) listed = {o(1), d(11), d(12), o(2), h(1), h(2), h(3)};
      else listed = {d(21), o(1), o(2), d(22), h(1), h(2), h(3)};
      listed.insert(listed.end(), {h(2), h(3)});
    } else {
      if (k == 1) listed = {o(1), d(11), h(1), o(2), h(2), h(3), d(12)};
      else listed = {d(21), o(1), o(2), h(1), h(2), h(3), d(22)};
      listed.push_back(d(k == 1 ? 12 : 22));
    }
    const auto tail = clause_tail(formula_.occurrences(l)[k - 1]);
    listed.insert(listed.end(), tail.begin(), tail.end());
    return complete(listed);
  }

  std::vector<AgentId> build_sequence() {
    std::vector<AgentId> seq;
    const AgentId one{0};
    for (std::uint32_t v = 1; v <= formula_.num_variables(); ++v) {
      const AgentId a1 = agent(neg(v), 1), a2 = agent(neg(v), 2);
      const AgentId b1 = agent(pos(v), 1), b2 = agent(pos(v), 2);
      const std::size_t begin = seq.size();
      seq.insert(seq.end(), {one, a1, a2, b1, b2, one, a1, a2, b1, b2, a1, a2, one, b1, b2, one});
      rounds_.push_back({RoundKind::kChoice, v - 1, begin, seq.size()});
    }
    for (std::size_t c = 0; c < formula_.clauses().size(); ++c) {
      const std::size_t begin = seq.size();
      for (Literal l : formula_.clauses()[c]) {
        const int k = formula_.occurrences(l)[0] == c ? 1 : 2;
        seq.push_back(agent(l.negated(), k));
      }
      rounds_.push_back({RoundKind::kClause, c, begin, seq.size()});
    }
    const std::size_t begin = seq.size();
    seq.insert(seq.end(), formula_.clauses().size(), one);
    rounds_.push_back({RoundKind::kCollection, 0, begin, seq.size()});
    return seq;
  }

  // Round r (1-based) works at scale B_r = M^(|X| - r + 1). Clause items o_c^1
  // sit just above the sum of everything agent 1 could collect otherwise, and
  // M exceeds twice that sum plus the largest per-round coefficient total.
  std::vector<Rational> manipulator_utilities(const Instance& instance) const {
    const std::size_t nx = formula_.num_variables();
    const std::size_t nc = formula_.clauses().size();
    const std::size_t leftovers = items_.size() - 10 * nx - nc;
    const BigInt sum_leftovers = BigInt(leftovers) * (leftovers + 1) / 2;
    const BigInt clause_base = sum_leftovers + 2 * nx + 1;

    std::vector<Rational> u(items_.size());
    BigInt clause_total = 0;
    for (std::size_t c = 0; c < nc; ++c) {
      const BigInt value = clause_base + (nc - 1 - c);
      u[item(clause_item_name(c, 1)).index] = Rational(value);
      clause_total += value;
    }
    const BigInt m = 2 * (clause_total + sum_leftovers) + 1200;

    BigInt scale = 1;
    for (std::size_t i = 0; i < nx; ++i) scale *= m;
    for (std::uint32_t v = 1; v <= nx; ++v, scale /= m) {
      const Literal x = pos(v), n = neg(v);
      auto set = [&](const std::string& name, const BigInt& value) {
        u[item(name).index] = Rational(value);
      };
      set(choice_item_name(x, 1), 100 * scale + 1);
      set(choice_item_name(n, 1), 100 * scale);
      set(choice_item_name(x, 2), 90 * scale + 1);
      set(choice_item_name(n, 2), 90 * scale);
      set(consistency_item_name(n, 1), 60 * scale);
      set(consistency_item_name(n, 2), 45 * scale);
      set(consistency_item_name(n, 3), 31 * scale);
      set(consistency_item_name(x, 1), 30 * scale);
      set(consistency_item_name(x, 2), 15 * scale);
      set(consistency_item_name(x, 3), scale);
    }

    // Leftovers count down along agent 1's order.
    BigInt next = leftovers;
    for (ItemId id : instance.preference(AgentId{0})) {
      if (u[id.index] == 0) u[id.index] = Rational(next--);
    }
    return u;
  }

  const RestrictedFormula& formula_;
  std::vector<Gadget> items_;
  std::vector<Gadget> agents_;
  std::vector<Round> rounds_;
  std::unordered_map<std::string, std::uint32_t> item_index_;
  std::unordered_map<std::string, std::uint32_t> agent_index_;

  static Rational target_of(const ReductionOutput& out);
};

Rational value_of(const ReductionOutput& out, const std::vector<ItemId>& items) {
  Rational total = 0;
  for (ItemId id : items) total += out.utilities.value(out.manipulator(), id);
  return total;
}

Rational Builder::target_of(const ReductionOutput& out) {
  Rational target = 0;
  for (std::uint32_t v = 1; v <= out.formula.num_variables(); ++v) {
    target += std::min(value_of(out, consistent_quadruple(out, v, true)),
                       value_of(out, consistent_quadruple(out, v, false)));
  }
  for (std::size_t c = 0; c < out.formula.clauses().size(); ++c) {
    target += out.utilities.value(out.manipulator(), out.clause_item(c, 1));
  }
  return target;
}

std::vector<ItemId> clause_firsts(const ReductionOutput& out) {
  std::vector<ItemId> items;
  for (std::size_t c = 0; c < out.formula.clauses().size(); ++c) {
    items.push_back(out.clause_item(c, 1));
  }
  return items;
}

Preference complete(const ReductionOutput& out, const std::vector<ItemId>& listed) {
  Preference pref;
  std::vector<bool> seen(out.instance.num_items(), false);
  for (ItemId id : listed) {
    if (!seen[id.index]) {
      seen[id.index] = true;
      pref.push_back(id);
    }
  }
  for (std::uint32_t i = 0; i < seen.size(); ++i) {
    if (!seen[i]) pref.push_back(ItemId{i});
  }
  return pref;
}

void require_total(const ReductionOutput& out, const TruthAssignment& assignment) {
  if (assignment.size() != out.formula.num_variables()) {
    throw FormulaError({"assignment covers " + std::to_string(assignment.size()) + " of " +
                        std::to_string(out.formula.num_variables()) + " variables"});
  }
}

std::string role_key(Role role) { return role_name(role); }

}  // namespace

const char* role_name(Role role) {
  switch (role) {
    case Role::kManipulator: return "manipulator";
    case Role::kLiteralAgent: return "literal_agent";
    case Role::kClauseItem: return "clause_item";
    case Role::kChoiceItem: return "choice_item";
    case Role::kConsistencyItem: return "consistency_item";
    case Role::kDummyItem: return "dummy_item";
  }
  return "unknown";
}

std::string literal_agent_name(Literal literal, int copy) {
  return sup("a_" + literal_stem(literal), copy);
}
std::string choice_item_name(Literal literal, int copy) {
  return sup("o_" + literal_stem(literal), copy);
}
std::string consistency_item_name(Literal literal, int copy) {
  return sup("h_" + literal_stem(literal), copy);
}
std::string dummy_item_name(Literal literal, int copy) {
  return sup("d_" + literal_stem(literal), copy);
}
std::string clause_item_name(std::size_t clause, int copy) {
  return sup("o_c" + std::to_string(clause + 1), copy);
}

AgentId ReductionOutput::agent(Literal literal, int copy) const {
  return instance.agent(literal_agent_name(literal, copy));
}
ItemId ReductionOutput::choice(Literal literal, int copy) const {
  return instance.item(choice_item_name(literal, copy));
}
ItemId ReductionOutput::consistency(Literal literal, int copy) const {
  return instance.item(consistency_item_name(literal, copy));
}
ItemId ReductionOutput::dummy(Literal literal, int copy) const {
  return instance.item(dummy_item_name(literal, copy));
}
ItemId ReductionOutput::clause_item(std::size_t clause, int copy) const {
  return instance.item(clause_item_name(clause, copy));
}

ReductionOutput build_instance(const RestrictedFormula& formula) {
  return Builder(formula).build();
}

std::vector<ItemId> consistent_quadruple(const ReductionOutput& out, std::uint32_t variable,
                                         bool value) {
  const Literal x = pos(variable), n = neg(variable);
  if (value) return {out.choice(n, 1), out.choice(n, 2), out.consistency(n, 3), out.consistency(x, 1)};
  return {out.choice(x, 1), out.choice(x, 2), out.consistency(n, 1), out.consistency(x, 3)};
}

std::vector<LedgerCheck> audit_utilities(const ReductionOutput& out) {
  const AgentId one = out.manipulator();
  auto u = [&](ItemId id) { return out.utilities.value(one, id); };
  std::vector<LedgerCheck> checks;
  auto check = [&](std::string name, bool passed, std::string detail = {}) {
    checks.push_back({std::move(name), passed, std::move(detail)});
  };

  const std::vector<Rational>& values = out.utilities.values(one);
  check("all utilities positive",
        std::all_of(values.begin(), values.end(), [](const Rational& r) { return r > 0; }));
  check("utilities consistent with agent 1's order",
        is_consistent(values, out.instance.preference(one)));

  // Items agent 1 can win outside the choice rounds, apart from o_c^1.
  std::vector<bool> in_round(out.instance.num_items(), false);
  for (std::uint32_t v = 1; v <= out.formula.num_variables(); ++v) {
    for (Literal l : {pos(v), neg(v)}) {
      for (int k : {1, 2}) in_round[out.choice(l, k).index] = true;
      for (int k : {1, 2, 3}) in_round[out.consistency(l, k).index] = true;
    }
  }
  Rational clause_total = 0, min_clause = 0, leftover_total = 0;
  for (std::size_t c = 0; c < out.formula.clauses().size(); ++c) {
    const Rational value = u(out.clause_item(c, 1));
    clause_total += value;
    if (c == 0 || value < min_clause) min_clause = value;
    in_round[out.clause_item(c, 1).index] = true;
  }
  for (std::uint32_t i = 0; i < in_round.size(); ++i) {
    if (!in_round[i]) leftover_total += u(ItemId{i});
  }

  Rational near_tie_total = 0;
  Rational later_total = clause_total + leftover_total;
  std::vector<Rational> round_dominance_gap;
  for (std::uint32_t v = out.formula.num_variables(); v >= 1; --v) {
    const Literal x = pos(v), n = neg(v);
    const std::string tag = "x" + std::to_string(v) + ": ";
    const Rational ox1 = u(out.choice(x, 1)), on1 = u(out.choice(n, 1));
    const Rational ox2 = u(out.choice(x, 2)), on2 = u(out.choice(n, 2));
    const Rational hn1 = u(out.consistency(n, 1)), hn2 = u(out.consistency(n, 2)),
                   hn3 = u(out.consistency(n, 3));
    const Rational hx1 = u(out.consistency(x, 1)), hx2 = u(out.consistency(x, 2)),
                   hx3 = u(out.consistency(x, 3));

    near_tie_total += abs(ox1 - on1) + abs(ox2 - on2);
    check(tag + "first choice items outrank second choice items", std::min(ox1, on1) > std::max(ox2, on2));
    check(tag + "h_negx^1 > h_negx^2 > h_negx^3 > h_x^1 > h_x^2 > h_x^3",
          hn1 > hn2 && hn2 > hn3 && hn3 > hx1 && hx1 > hx2 && hx2 > hx3);
    check(tag + "h_x^2 + h_negx^2 < h_negx^1 + h_x^3 = h_x^1 + h_negx^3",
          hx2 + hn2 < hn1 + hx3 && hn1 + hx3 == hx1 + hn3,
          to_exact_string(hx2 + hn2) + " < " + to_exact_string(hn1 + hx3) + " = " +
              to_exact_string(hx1 + hn3));

    const Rational worst_consistent =
        std::min(Rational(on1 + on2 + hn3 + hx1), Rational(ox1 + ox2 + hn1 + hx3));
    const Rational best_inconsistent = std::max(Rational(ox1 + on2), Rational(on1 + ox2)) + hx2 + hn2;
    const Rational gap = worst_consistent - best_inconsistent;
    check(tag + "round outweighs everything after it", gap > later_total,
          "gap " + to_exact_string(gap) + " vs later total " + to_exact_string(later_total));
    later_total += ox1 + on1 + ox2 + on2 + hn1 + hn2 + hn3 + hx1 + hx2 + hx3;
  }

  check("o_c^1 items outweigh all leftovers", min_clause > leftover_total,
        to_exact_string(min_clause) + " vs " + to_exact_string(leftover_total));
  check("near-tie surpluses and leftovers below one clause item",
        near_tie_total + leftover_total < min_clause,
        to_exact_string(near_tie_total + leftover_total) + " vs " + to_exact_string(min_clause));

  Rational expected = clause_total;
  for (std::uint32_t v = 1; v <= out.formula.num_variables(); ++v) {
    expected += std::min(value_of(out, consistent_quadruple(out, v, true)),
                         value_of(out, consistent_quadruple(out, v, false)));
  }
  check("target equals worst consistent rounds plus all o_c^1", expected == out.target,
        "T = " + to_exact_string(out.target));
  return checks;
}

Preference assignment_to_report(const ReductionOutput& out, const TruthAssignment& assignment) {
  require_total(out, assignment);
  std::vector<ItemId> listed;
  for (std::uint32_t v = 1; v <= out.formula.num_variables(); ++v) {
    const auto quad = consistent_quadruple(out, v, assignment[v - 1]);
    listed.insert(listed.end(), quad.begin(), quad.end());
  }
  const auto firsts = clause_firsts(out);
  listed.insert(listed.end(), firsts.begin(), firsts.end());
  return complete(out, listed);
}

ForwardResult verify_forward(const ReductionOutput& out, const TruthAssignment& assignment) {
  Preference report = assignment_to_report(out, assignment);
  Allocation allocation = run_with_report(out.instance, out.manipulator(), report);
  const Bundle& bundle = allocation.bundle(out.manipulator());
  Rational utility = bundle_utility(out.utilities, out.manipulator(), bundle);
  const auto firsts = clause_firsts(out);
  const bool holds_all = std::all_of(firsts.begin(), firsts.end(),
                                     [&](ItemId id) { return bundle.contains(id); });
  const bool meets = utility >= out.target;
  return ForwardResult{std::move(report), std::move(allocation), std::move(utility), meets,
                       out.formula.satisfies(assignment), holds_all};
}

const char* pattern_name(ChoicePattern pattern) {
  switch (pattern) {
    case ChoicePattern::kTrue: return "true";
    case ChoicePattern::kFalse: return "false";
    case ChoicePattern::kPositiveThenNegated: return "o_x^1,o_negx^2";
    case ChoicePattern::kNegatedThenPositive: return "o_negx^1,o_x^2";
  }
  return "unknown";
}

bool is_consistent(ChoicePattern pattern) {
  return pattern == ChoicePattern::kTrue || pattern == ChoicePattern::kFalse;
}

Preference pattern_report(const ReductionOutput& out, const std::vector<ChoicePattern>& patterns) {
  if (patterns.size() != out.formula.num_variables()) {
    throw std::invalid_argument("need one choice pattern per variable");
  }
  const auto firsts = clause_firsts(out);
  std::vector<ItemId> fixed;
  for (std::uint32_t v = 1; v <= out.formula.num_variables(); ++v) {
    const ChoicePattern p = patterns[v - 1];
    const Literal x = pos(v), n = neg(v);
    const bool first_x = p == ChoicePattern::kFalse || p == ChoicePattern::kPositiveThenNegated;
    const bool second_x = p == ChoicePattern::kFalse || p == ChoicePattern::kNegatedThenPositive;
    const ItemId c1 = out.choice(first_x ? x : n, 1);
    const ItemId c2 = out.choice(second_x ? x : n, 2);

    std::vector<ItemId> listed = fixed;
    listed.insert(listed.end(), {c1, c2, out.consistency(n, 1), out.consistency(n, 2),
                                 out.consistency(n, 3), out.consistency(x, 1),
                                 out.consistency(x, 2), out.consistency(x, 3)});
    listed.insert(listed.end(), firsts.begin(), firsts.end());
    const Allocation trial =
        run_with_report(out.instance, out.manipulator(), complete(out, listed));
    const std::size_t base = out.rounds[v - 1].begin;
    fixed.insert(fixed.end(), {c1, c2, trial.trace()[base + 12].item, trial.trace()[base + 15].item});
  }
  fixed.insert(fixed.end(), firsts.begin(), firsts.end());
  return complete(out, fixed);
}

PatternReport verify_choice_patterns(const ReductionOutput& out, std::uint32_t max_variables) {
  const std::uint32_t nx = out.formula.num_variables();
  if (nx > max_variables) {
    throw oracle::BudgetExceeded("pattern enumeration over " + std::to_string(nx) +
                                 " variables exceeds the limit of " +
                                 std::to_string(max_variables));
  }
  static constexpr ChoicePattern kAll[] = {ChoicePattern::kTrue, ChoicePattern::kFalse,
                                           ChoicePattern::kPositiveThenNegated,
                                           ChoicePattern::kNegatedThenPositive};
  PatternReport report{{}, true, true, false, !out.formula.satisfying_assignments().empty()};
  const AgentId one = out.manipulator();

  std::vector<std::size_t> digits(nx, 0);
  while (true) {
    PatternOutcome outcome;
    for (std::size_t d : digits) outcome.patterns.push_back(kAll[d]);
    const Allocation allocation =
        run_with_report(out.instance, one, pattern_report(out, outcome.patterns));
    outcome.utility = bundle_utility(out.utilities, one, allocation.bundle(one));
    outcome.meets_target = outcome.utility >= out.target;
    outcome.consistent = std::all_of(outcome.patterns.begin(), outcome.patterns.end(),
                                     [](ChoicePattern p) { return is_consistent(p); });
    outcome.satisfies_formula = false;
    if (outcome.consistent) {
      TruthAssignment t;
      for (ChoicePattern p : outcome.patterns) t.push_back(p == ChoicePattern::kTrue);
      outcome.satisfies_formula = out.formula.satisfies(t);
      outcome.assignment = std::move(t);
    }
    for (std::uint32_t v = 1; v <= nx; ++v) {
      const std::size_t base = out.rounds[v - 1].begin;
      const Bundle got{allocation.trace()[base + 12].item, allocation.trace()[base + 15].item};
      if (!is_consistent(outcome.patterns[v - 1])) {
        const Bundle expected{out.consistency(pos(v), 2), out.consistency(neg(v), 2)};
        if (got != expected) report.inconsistent_rounds_ok = false;
      }
      outcome.consistency_items.push_back(got);
    }
    const bool should_meet = outcome.consistent && outcome.satisfies_formula;
    if (outcome.meets_target != should_meet) report.target_iff_satisfying = false;
    if (outcome.meets_target) report.satisfiable_by_patterns = true;
    report.outcomes.push_back(std::move(outcome));

    // Odometer over the pattern digits, last variable fastest.
    std::size_t pos_digit = nx;
    while (pos_digit > 0 && ++digits[pos_digit - 1] == 4) digits[--pos_digit] = 0;
    if (pos_digit == 0) break;
  }
  return report;
}

std::string registry_json(const ReductionOutput& out) {
  using nlohmann::ordered_json;
  auto gadget = [](const Gadget& g, std::uint32_t id) {
    ordered_json j;
    j["id"] = id;
    j["name"] = g.name;
    j["role"] = role_key(g.role);
    if (g.literal) j["literal"] = literal_stem(*g.literal);
    if (g.clause) j["clause"] = *g.clause + 1;
    if (g.copy) j["copy"] = g.copy;
    return j;
  };
  ordered_json doc;
  doc["agents"] = ordered_json::array();
  for (std::uint32_t i = 0; i < out.registry.agents().size(); ++i) {
    doc["agents"].push_back(gadget(out.registry.agents()[i], i));
  }
  doc["items"] = ordered_json::array();
  for (std::uint32_t i = 0; i < out.registry.items().size(); ++i) {
    doc["items"].push_back(gadget(out.registry.items()[i], i));
  }
  doc["rounds"] = ordered_json::array();
  for (const Round& r : out.rounds) {
    ordered_json j;
    j["kind"] = r.kind == RoundKind::kChoice ? "choice"
                : r.kind == RoundKind::kClause ? "clause" : "collection";
    if (r.kind == RoundKind::kChoice) j["variable"] = r.index + 1;
    if (r.kind == RoundKind::kClause) j["clause"] = r.index + 1;
    j["first_stage"] = r.begin + 1;
    j["last_stage"] = r.end;
    doc["rounds"].push_back(std::move(j));
  }
  doc["target"] = to_exact_string(out.target);
  return doc.dump(2) + "\n";
}

}  // namespace seqalloc::reduction
