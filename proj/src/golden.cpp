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

#include "seqalloc/golden.hpp"

#include <algorithm>

#include "seqalloc/engine.hpp"
#include "seqalloc/oracle.hpp"
#include "seqalloc/reduction.hpp"

namespace seqalloc::golden {

namespace {

GoldenTable choice_table(std::string name, const std::string& i, std::vector<std::string> items) {
  const std::string a = "a_negx" + i, b = "a_x" + i;
  std::vector<std::string> agents = {"1",      a + "^1", a + "^2", b + "^1", b + "^2", "1",
                                     a + "^1", a + "^2", b + "^1", b + "^2", a + "^1", a + "^2",
                                     "1",      b + "^1", b + "^2", "1"};
  return GoldenTable{std::move(name), std::move(agents), std::move(items), {}};
}

// Choice-round rows in which x_i is set true / false.
std::vector<std::string> true_row(const std::string& i) {
  const std::string x = "x" + i, n = "negx" + i;
  return {"o_" + n + "^1",  "o_" + x + "^1",  "d_" + x + "^21", "d_" + n + "^11",
          "d_" + n + "^21", "o_" + n + "^2",  "d_" + x + "^11", "o_" + x + "^2",
          "h_" + n + "^1",  "h_" + n + "^2",  "d_" + x + "^12", "d_" + x + "^22",
          "h_" + n + "^3",  "d_" + n + "^12", "d_" + n + "^22", "h_" + x + "^1"};
}

std::vector<std::string> false_row(const std::string& i) {
  const std::string x = "x" + i, n = "negx" + i;
  return {"o_" + x + "^1",  "d_" + x + "^11", "d_" + x + "^21", "o_" + n + "^1",
          "d_" + n + "^21", "o_" + x + "^2",  "d_" + x + "^12", "d_" + x + "^22",
          "d_" + n + "^11", "o_" + n + "^2",  "h_" + x + "^1",  "h_" + x + "^2",
          "h_" + n + "^1",  "h_" + n + "^2",  "h_" + n + "^3",  "h_" + x + "^3"};
}

Allocation replay(const GoldenOptions& options, const Instance& instance, AgentId agent,
                  const Preference& report) {
  const Instance modified = instance.with_preference(agent, report);
  return options.engine ? options.engine(modified) : run_sequential_allocation(modified);
}

Preference report_of(const Instance& instance, std::initializer_list<const char*> names) {
  Preference report;
  for (const char* name : names) report.push_back(instance.item(name));
  return report;
}

Bundle bundle_of(const Instance& instance, std::initializer_list<const char*> names) {
  Bundle bundle;
  for (const char* name : names) bundle.insert(instance.item(name));
  return bundle;
}

UtilityProfile manipulator_utilities(const Instance& instance, std::vector<Rational> by_rank) {
  UtilityProfile u(instance.num_agents(), instance.num_items());
  const Preference& pref = instance.preference(AgentId{0});
  std::vector<Rational> by_item(instance.num_items());
  for (std::size_t r = 0; r < pref.size(); ++r) by_item[pref[r].index] = by_rank[r];
  u.set(AgentId{0}, std::move(by_item));
  return u;
}

void describe(const TableDiff& diff, std::vector<std::string>& details) {
  for (const StageDiff& d : diff.diffs) {
    details.push_back(diff.table + ", stage " + std::to_string(d.stage) + " " + d.field +
                      ": printed " + d.printed + ", computed " + d.computed +
                      (d.known_misprint ? " (known misprint)" : " (MISMATCH)"));
  }
  for (const std::string& stale : diff.stale_misprints) {
    details.push_back(diff.table + ": " + stale);
  }
}

CheckResult check_tables(const std::string& name, const std::vector<GoldenTable>& tables,
                         const std::vector<std::span<const Pick>>& slices,
                         const Instance& instance) {
  CheckResult result{name, true, {}};
  if (tables.size() != slices.size()) {
    return {name, false, {"expected " + std::to_string(slices.size()) + " tables, got " +
                          std::to_string(tables.size())}};
  }
  for (std::size_t t = 0; t < tables.size(); ++t) {
    const TableDiff diff = compare_table(tables[t], instance, slices[t]);
    if (!diff.ok()) result.passed = false;
    describe(diff, result.details);
  }
  return result;
}

std::string bundle_text(const Instance& instance, const Bundle& bundle) {
  return instance.format_bundle(bundle);
}

}  // namespace

Instance example1_instance() {
  return validate_instance(RawInstance{{"o1", "o2", "o3", "o4"},
                                       {"1", "2"},
                                       {{"o1", "o2", "o3", "o4"}, {"o1", "o3", "o2", "o4"}},
                                       {"1", "2", "2", "1"}});
}

Instance counterexample_instance() {
  return validate_instance(
      RawInstance{{"a", "b", "c", "d"},
                  {"1", "2", "3"},
                  {{"a", "b", "c", "d"}, {"c", "d", "a", "b"}, {"a", "b", "c", "d"}},
                  {"1", "2", "3", "1"}});
}

RestrictedFormula four_clause_formula() {
  auto l = [](int v) { return Literal{static_cast<std::uint32_t>(v < 0 ? -v : v), v > 0}; };
  return RestrictedFormula(3, {Clause{l(1), l(2), l(3)}, Clause{l(-1), l(-2), l(-3)},
                               Clause{l(1), l(-2), l(3)}, Clause{l(-1), l(2), l(-3)}});
}

TruthAssignment four_clause_assignment() { return {true, false, false}; }

bool TableDiff::ok() const {
  return stale_misprints.empty() &&
         std::all_of(diffs.begin(), diffs.end(), [](const StageDiff& d) { return d.known_misprint; });
}

TableDiff compare_table(const GoldenTable& table, const Instance& instance,
                        std::span<const Pick> picks) {
  TableDiff out{table.name, {}, {}};
  if (picks.size() != table.items.size()) {
    out.diffs.push_back({0, "length", std::to_string(table.items.size()),
                         std::to_string(picks.size()), false});
    return out;
  }
  for (std::size_t s = 0; s < picks.size(); ++s) {
    const std::size_t stage = s + 1;
    const std::string& agent = instance.agent_name(picks[s].agent);
    if (agent != table.agents[s]) {
      out.diffs.push_back({stage, "agent", table.agents[s], agent, false});
    }
    const std::string& item = instance.item_name(picks[s].item);
    auto misprint = table.known_misprints.find(stage);
    if (item != table.items[s]) {
      const bool known = misprint != table.known_misprints.end() && misprint->second == item;
      out.diffs.push_back({stage, "item", table.items[s], item, known});
    }
    if (misprint != table.known_misprints.end() && misprint->second != item) {
      out.stale_misprints.push_back("stage " + std::to_string(stage) + " marked as misprint for " +
                                    misprint->second + " but computed " + item);
    }
  }
  return out;
}

std::vector<GoldenTable> worked_example_tables() {
  std::vector<GoldenTable> tables;
  tables.push_back(choice_table("Choice round 1", "1", true_row("1")));
  tables.push_back(choice_table("Choice round 2", "2", false_row("2")));
  tables.push_back(choice_table("Choice round 3", "3", false_row("3")));
  tables.push_back({"Clause round 1",
                    {"a_negx1^1", "a_negx2^1", "a_negx3^1"},
                    {"h_x1^2", "o_c1^3", "o_c1^3"},
                    {{3, "o_c1^2"}}});
  tables.push_back({"Clause round 2",
                    {"a_x1^1", "a_x2^1", "a_x3^1"},
                    {"o_c2^3", "d_negx2^12", "d_negx3^12"},
                    {}});
  tables.push_back({"Clause round 3",
                    {"a_negx1^2", "a_x2^2", "a_negx3^2"},
                    {"h_x1^3", "d_negx2^22", "o_c3^2"},
                    {{3, "o_c3^3"}}});
  tables.push_back({"Clause round 4",
                    {"a_x1^2", "a_negx2^2", "a_x3^2"},
                    {"o_c4^2", "o_c4^2", "d_negx3^22"},
                    {{1, "o_c4^3"}}});
  tables.push_back({"Collection round",
                    {"1", "1", "1", "1"},
                    {"o_c1^1", "o_c2^1", "o_c3^1", "o_c4^1"},
                    {}});
  return tables;
}

std::vector<GoldenTable> generic_choice_tables() {
  std::vector<GoldenTable> tables;
  tables.push_back(choice_table("Choice round, consistent o_negx^1 and o_negx^2", "1", true_row("1")));
  tables.push_back(choice_table("Choice round, consistent o_x^1 and o_x^2", "1", false_row("1")));

  GoldenTable pos_neg = choice_table(
      "Choice round, inconsistent o_x^1 and o_negx^2", "1",
      {"o_x1^1", "d_x1^11", "d_x1^21", "o_negx1^1", "d_negx1^21", "o_negx1^2", "d_x1^12",
       "o_x1^2", "d_negx1^11", "h_negx1^1", "h_x1^1", "d_x1^22", "h_negx1^2", "h_negx1^2",
       "h_negx1^3", "h_x1^2"});
  pos_neg.known_misprints = {{14, "h_negx1^3"}, {15, "d_negx1^22"}};
  tables.push_back(std::move(pos_neg));

  GoldenTable neg_pos = choice_table(
      "Choice round, inconsistent o_negx^1 and o_x^2", "1",
      {"o_negx1^1", "o_x1^1", "d_x1^21", "d_negx1^11", "d_negx1^21", "o_x1^2", "d_x1^11",
       "d_x1^22", "h_negx1^1", "o_negx1^2", "d_x1^12", "h_x1^1", "h_negx1^2", "d_negx1^12",
       "d_negx1^22", "h_x1^2"});
  neg_pos.known_misprints = {{14, "h_negx1^3"}};
  tables.push_back(std::move(neg_pos));
  return tables;
}

std::vector<CheckResult> run_paper_examples(const GoldenOptions& options) {
  std::vector<CheckResult> results;
  const AgentId one{0};

  {
    const Instance inst = example1_instance();
    const Allocation a = replay(options, inst, one, inst.preference(one));
    const bool ok = a.bundle(one) == bundle_of(inst, {"o1", "o4"}) &&
                    a.bundle(AgentId{1}) == bundle_of(inst, {"o2", "o3"});
    results.push_back({"example 1: sequence 1221", ok,
                       {"agent 1 " + bundle_text(inst, a.bundle(one)) + ", agent 2 " +
                        bundle_text(inst, a.bundle(AgentId{1}))}});
  }

  const Instance cx = counterexample_instance();
  {
    const Allocation truthful = replay(options, cx, one, cx.preference(one));
    const Allocation misreport = replay(options, cx, one, report_of(cx, {"c", "b", "a", "d"}));
    const bool ok = truthful.bundle(one) == bundle_of(cx, {"a", "d"}) &&
                    misreport.bundle(one) == bundle_of(cx, {"b", "c"});
    results.push_back({"counterexample: replays", ok,
                       {"truthful " + bundle_text(cx, truthful.bundle(one)),
                        "report c,b,a,d " + bundle_text(cx, misreport.bundle(one))}});
  }
  {
    const auto u = manipulator_utilities(cx, {Rational(31, 10), 3, 2, 1});
    const auto r = oracle::brute_force_best_response(cx, u, one);
    const bool ok = r.max_utility == 5 && r.optima.size() == 1 &&
                    r.optima[0].bundle == bundle_of(cx, {"b", "c"}) &&
                    bundle_utility(u, one, bundle_of(cx, {"a", "d"})) == Rational(41, 10);
    results.push_back({"counterexample: oracle with 3.1,3,2,1", ok,
                       {"max " + to_exact_string(r.max_utility) + " over " +
                        std::to_string(r.optima.size()) + " optimal bundle(s)"}});
  }
  {
    const auto u = manipulator_utilities(cx, {4, 3, 2, 1});
    const auto r = oracle::brute_force_best_response(cx, u, one);
    const bool ok = r.max_utility == 5 && r.optima.size() == 2 &&
                    r.optima[0].bundle == bundle_of(cx, {"a", "d"}) &&
                    r.optima[1].bundle == bundle_of(cx, {"b", "c"});
    results.push_back({"counterexample: oracle with 4,3,2,1", ok,
                       {"max " + to_exact_string(r.max_utility) + " over " +
                        std::to_string(r.optima.size()) + " optimal bundle(s)"}});
  }
  {
    const Bundle greedy = oracle::refuted_greedy_best_response(cx, one);
    results.push_back({"counterexample: refuted greedy", greedy == bundle_of(cx, {"a", "d"}),
                       {"greedy " + bundle_text(cx, greedy)}});
  }
  {
    const auto achievable = oracle::enumerate_achievable_bundles(cx, one);
    const bool ok = achievable.contains(bundle_of(cx, {"a", "d"})) &&
                    achievable.contains(bundle_of(cx, {"b", "c"})) &&
                    !achievable.contains(bundle_of(cx, {"a", "b"})) &&
                    !achievable.contains(bundle_of(cx, {"a", "c"}));
    results.push_back({"counterexample: achievable bundles", ok,
                       {std::to_string(achievable.size()) + " achievable bundles"}});
  }

  const reduction::ReductionOutput out = reduction::build_instance(four_clause_formula());
  {
    CheckResult r{"reduction: structure and utility ledger", true, {}};
    r.details.push_back(std::to_string(out.instance.num_agents()) + " agents, " +
                        std::to_string(out.instance.num_items()) + " items, " +
                        std::to_string(out.instance.sequence_length()) + " stages");
    if (out.instance.num_agents() != 13 || out.instance.num_items() != 66 ||
        out.instance.sequence_length() != 64) {
      r.passed = false;
    }
    for (const auto& check : reduction::audit_utilities(out)) {
      if (!check.passed) {
        r.passed = false;
        r.details.push_back("ledger check failed: " + check.name + " " + check.detail);
      }
    }
    results.push_back(std::move(r));
  }
  {
    const Preference report = reduction::assignment_to_report(out, four_clause_assignment());
    const Allocation a = replay(options, out.instance, one, report);
    const Rational utility = bundle_utility(out.utilities, one, a.bundle(one));
    bool holds_all = true;
    for (std::size_t c = 0; c < 4; ++c) holds_all &= a.bundle(one).contains(out.clause_item(c, 1));
    CheckResult r{"reduction: x1=T, x2=F, x3=F reaches the target",
                  holds_all && utility >= out.target,
                  {"utility " + to_exact_string(utility) + ", target " + to_exact_string(out.target)}};
    results.push_back(std::move(r));

    std::vector<std::span<const Pick>> slices;
    const std::span<const Pick> trace(a.trace());
    for (const reduction::Round& round : out.rounds) {
      slices.push_back(trace.subspan(round.begin, round.end - round.begin));
    }
    results.push_back(check_tables("reduction: worked example tables", options.worked_tables,
                                   slices, out.instance));
  }
  {
    using reduction::ChoicePattern;
    const std::vector<ChoicePattern> first = {ChoicePattern::kTrue, ChoicePattern::kFalse,
                                              ChoicePattern::kPositiveThenNegated,
                                              ChoicePattern::kNegatedThenPositive};
    std::vector<Allocation> runs;
    std::vector<std::span<const Pick>> slices;
    for (ChoicePattern p : first) {
      const Preference report =
          reduction::pattern_report(out, {p, ChoicePattern::kTrue, ChoicePattern::kTrue});
      runs.push_back(replay(options, out.instance, one, report));
    }
    for (const Allocation& a : runs) slices.push_back(std::span<const Pick>(a.trace()).first(16));
    results.push_back(
        check_tables("reduction: generic choice tables", options.generic_tables, slices, out.instance));
  }
  {
    const auto patterns = reduction::verify_choice_patterns(out);
    std::size_t meeting = 0;
    for (const auto& o : patterns.outcomes) meeting += o.meets_target;
    results.push_back({"reduction: choice patterns agree with satisfiability", patterns.ok(),
                       {std::to_string(patterns.outcomes.size()) + " patterns, " +
                        std::to_string(meeting) + " reach the target"}});
  }
  return results;
}

}  // namespace seqalloc::golden
