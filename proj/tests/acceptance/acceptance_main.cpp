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


// Runs the acceptance criteria in order and prints one PASS/FAIL line per
// criterion, followed by indented details. Exits 1 if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "seqalloc/engine.hpp"
#include "seqalloc/golden.hpp"
#include "seqalloc/oracle.hpp"
#include "seqalloc/reduction.hpp"
#include "seqalloc/two_agent.hpp"
#include "support/random_instances.hpp"
#include "support/reference.hpp"

namespace seqalloc {
namespace {

using Clock = std::chrono::steady_clock;
using Millis = std::chrono::duration<double, std::milli>;

struct Outcome {
  bool passed = true;
  std::vector<std::string> details;

  void require(bool condition, std::string what) {
    if (!condition) {
      passed = false;
      details.push_back("failed: " + std::move(what));
    }
  }
  void note(std::string what) { details.push_back(std::move(what)); }
};

struct Criterion {
  const char* id;
  const char* title;
  double limit_ms;  // 0 means no time limit
  std::function<void(Outcome&)> body;
};

Bundle named(const Instance& inst, std::initializer_list<const char*> names) {
  Bundle out;
  for (const char* n : names) out.insert(inst.item(n));
  return out;
}

Preference ranked(const Instance& inst, std::initializer_list<const char*> names) {
  Preference out;
  for (const char* n : names) out.push_back(inst.item(n));
  return out;
}

UtilityProfile by_rank(const Instance& inst, AgentId agent, std::vector<Rational> values) {
  std::vector<Rational> by_item(inst.num_items());
  const Preference& pref = inst.preference(agent);
  for (std::size_t r = 0; r < pref.size(); ++r) by_item[pref[r].index] = values[r];
  return testing::utilities_for(inst, agent, std::move(by_item));
}

void example_one(Outcome& o) {
  const Instance inst = golden::example1_instance();
  const Allocation a = run_sequential_allocation(inst);
  o.require(a.bundle(inst.agent("1")) == named(inst, {"o1", "o4"}), "agent 1 gets {o1,o4}");
  o.require(a.bundle(inst.agent("2")) == named(inst, {"o2", "o3"}), "agent 2 gets {o2,o3}");
  o.require(a.matrix() == std::vector<std::vector<int>>{{1, 0, 0, 1}, {0, 1, 1, 0}},
            "allocation matrix");
}

void counterexample(Outcome& o) {
  const Instance inst = golden::counterexample_instance();
  const AgentId one = inst.agent("1");
  o.require(run_sequential_allocation(inst).bundle(one) == named(inst, {"a", "d"}),
            "truthful replay gives {a,d}");
  o.require(run_with_report(inst, one, ranked(inst, {"c", "b", "a", "d"})).bundle(one) ==
                named(inst, {"b", "c"}),
            "report c,b,a,d gives {b,c}");

  const auto tie_broken = by_rank(inst, one, {Rational(31, 10), Rational(3), Rational(2), Rational(1)});
  const auto r1 = oracle::brute_force_best_response(inst, tie_broken, one);
  o.require(r1.max_utility == 5 && r1.optima.size() == 1 &&
                r1.optima[0].bundle == named(inst, {"b", "c"}),
            "u=(3.1,3,2,1) has the unique optimum {b,c} at 5");
  o.require(bundle_utility(tie_broken, one, named(inst, {"a", "d"})) == Rational(41, 10),
            "{a,d} is worth 4.1 under u=(3.1,3,2,1)");

  const auto tied = by_rank(inst, one, {Rational(4), Rational(3), Rational(2), Rational(1)});
  const auto r2 = oracle::brute_force_best_response(inst, tied, one);
  o.require(r2.max_utility == 5 && r2.optima.size() == 2 &&
                r2.optima[0].bundle == named(inst, {"a", "d"}) &&
                r2.optima[1].bundle == named(inst, {"b", "c"}),
            "u=(4,3,2,1) has optima {a,d} and {b,c} at 5");
  o.require(oracle::refuted_greedy_best_response(inst, one) == named(inst, {"a", "d"}),
            "refuted greedy returns {a,d}");
}

void achievable_set(Outcome& o) {
  const Instance inst = golden::counterexample_instance();
  const auto bundles = oracle::enumerate_achievable_bundles(inst, inst.agent("1"));
  o.require(bundles.contains(named(inst, {"a", "d"})), "contains {a,d}");
  o.require(bundles.contains(named(inst, {"b", "c"})), "contains {b,c}");
  o.require(!bundles.contains(named(inst, {"a", "b"})), "excludes {a,b}");
  o.require(!bundles.contains(named(inst, {"a", "c"})), "excludes {a,c}");
  std::string listed;
  for (const Bundle& b : bundles) listed += inst.format_bundle(b) + " ";
  o.note("achievable: " + listed);
}

// Shared by criteria 4 and 5.
std::vector<Instance> two_agent_instances() {
  testing::Rng rng(20260401);
  std::vector<Instance> out;
  for (int i = 0; i < 200; ++i) out.push_back(testing::random_instance_between(rng, 2, 1, 8));
  return out;
}

void two_agent_correctness(Outcome& o) {
  testing::Rng rng(4);
  std::size_t mismatches = 0;
  const auto instances = two_agent_instances();
  for (const Instance& inst : instances) {
    const AgentId one{0};
    const auto u = testing::utilities_for(
        inst, one, testing::random_consistent_utilities(rng, inst.preference(one)));
    const auto lex = two_agent::lexicographic_best_response(inst, one);
    const auto best = oracle::brute_force_best_response(inst, u, one);
    if (bundle_utility(u, one, lex.bundle) != best.max_utility) ++mismatches;
  }
  o.note(std::to_string(instances.size()) + " instances, " + std::to_string(mismatches) +
         " mismatches");
  o.require(mismatches == 0, "lexicographic response reaches the oracle maximum");
}

void uniqueness(Outcome& o) {
  testing::Rng rng(5);
  std::size_t mismatches = 0;
  const auto instances = two_agent_instances();
  for (const Instance& inst : instances) {
    const AgentId one{0};
    std::set<Bundle> responses;
    bool agrees = true;
    for (int draw = 0; draw < 3; ++draw) {
      const auto u = testing::utilities_for(
          inst, one, testing::random_consistent_utilities(rng, inst.preference(one)));
      const auto br = two_agent::best_response(inst, u, one);
      const auto best = oracle::brute_force_best_response(inst, u, one);
      responses.insert(br.bundle);
      agrees = agrees && best.optima.size() == 1 && best.optima[0].bundle == br.bundle;
    }
    if (responses.size() != 1 || !agrees) ++mismatches;
  }
  o.note(std::to_string(instances.size()) + " instances x 3 draws, " +
         std::to_string(mismatches) + " mismatches");
  o.require(mismatches == 0, "one bundle across draws, equal to the unique oracle argmax");
}

void characterization(Outcome& o) {
  testing::Rng rng(6);
  std::size_t checked = 0, mismatches = 0;
  for (int i = 0; i < 100; ++i) {
    const Instance inst = testing::random_instance_between(rng, 2, 3, 8);
    const AgentId one{0};
    std::vector<Bundle> targets;
    const auto items = inst.items();
    for (std::size_t x = 0; x < items.size(); ++x) {
      for (std::size_t y = x + 1; y < items.size(); ++y) {
        targets.push_back({items[x], items[y]});
        for (std::size_t z = y + 1; z < items.size(); ++z) targets.push_back({items[x], items[y], items[z]});
      }
    }
    for (const Bundle& target : targets) {
      ++checked;
      if (two_agent::is_achievable(target, inst, one) !=
          two_agent::achievability_certificate(target, inst, one)) {
        ++mismatches;
      }
    }
  }
  o.note(std::to_string(checked) + " subsets, " + std::to_string(mismatches) + " mismatches");
  o.require(mismatches == 0, "containment check equals the certificate");
}

// b is the opponent's favourite item of B\A. Taking b as agent 1's own
// favourite instead has counterexamples; those are counted and reported.
void exchange(Outcome& o) {
  testing::Rng rng(7);
  std::size_t quadruples = 0, violations = 0, own_choice_violations = 0;
  for (int i = 0; i < 50; ++i) {
    const Instance inst = testing::random_instance_between(rng, 2, 2, 8);
    const AgentId one{0}, two{1};
    const auto achievable = oracle::enumerate_achievable_bundles(inst, one);
    auto top = [&](AgentId agent, const Bundle& s) {
      return *std::min_element(s.begin(), s.end(),
                               [&](ItemId p, ItemId q) { return inst.prefers(agent, p, q); });
    };
    auto swapped = [](Bundle b_set, ItemId a, ItemId b) {
      b_set.erase(b);
      b_set.insert(a);
      return b_set;
    };
    for (const Bundle& a_set : achievable) {
      for (const Bundle& b_set : achievable) {
        Bundle a_only, b_only;
        std::set_difference(a_set.begin(), a_set.end(), b_set.begin(), b_set.end(),
                            std::inserter(a_only, a_only.end()));
        std::set_difference(b_set.begin(), b_set.end(), a_set.begin(), a_set.end(),
                            std::inserter(b_only, b_only.end()));
        if (a_only.empty() || b_only.empty()) continue;
        Bundle both = a_only;
        both.insert(b_only.begin(), b_only.end());
        const ItemId a = top(one, both);
        if (!a_only.contains(a)) continue;
        ++quadruples;
        if (!achievable.contains(swapped(b_set, a, top(two, b_only)))) ++violations;
        if (!achievable.contains(swapped(b_set, a, top(one, b_only)))) ++own_choice_violations;
      }
    }
  }
  o.note(std::to_string(quadruples) + " quadruples, " + std::to_string(violations) +
         " violations with b = opponent's top of B\\A");
  o.note(std::to_string(own_choice_violations) +
         " violations with b = agent 1's top of B\\A (not required)");
  o.require(quadruples > 0, "quadruples exist");
  o.require(violations == 0, "every exchange stays achievable");
}

void reduction_structure(Outcome& o) {
  const auto out = reduction::build_instance(golden::four_clause_formula());
  o.require(out.instance.num_agents() == 13, "13 agents");
  o.require(out.instance.num_items() == 66, "66 items");
  o.require(out.instance.sequence_length() == 64, "64 stages");
  std::size_t checks = 0;
  for (const auto& check : reduction::audit_utilities(out)) {
    ++checks;
    o.require(check.passed, "ledger: " + check.name + " " + check.detail);
  }
  o.note(std::to_string(checks) + " ledger checks, target " + to_exact_string(out.target));
}

void reduction_forward(Outcome& o) {
  const auto out = reduction::build_instance(golden::four_clause_formula());
  const auto r = reduction::verify_forward(out, golden::four_clause_assignment());
  o.require(r.holds_all_clause_items, "agent 1 holds every o_c^1");
  o.require(r.utility >= out.target, "utility reaches the target");
  o.note("utility " + to_exact_string(r.utility) + ", target " + to_exact_string(out.target));

  const auto tables = golden::worked_example_tables();
  o.require(tables.size() == out.rounds.size(), "one table per round");
  if (tables.size() != out.rounds.size()) return;
  const std::span<const Pick> trace(r.allocation.trace());
  for (std::size_t t = 0; t < tables.size(); ++t) {
    const auto& round = out.rounds[t];
    const auto diff =
        golden::compare_table(tables[t], out.instance, trace.subspan(round.begin, round.end - round.begin));
    for (const auto& d : diff.diffs) {
      o.note(diff.table + ", stage " + std::to_string(d.stage) + " " + d.field + ": printed " +
             d.printed + ", computed " + d.computed +
             (d.known_misprint ? " (known misprint)" : " (MISMATCH)"));
    }
    for (const auto& stale : diff.stale_misprints) o.note(diff.table + ": " + stale);
    o.require(diff.ok(), diff.table + " matches apart from known misprints");
  }
}

void reduction_patterns(Outcome& o) {
  const auto out = reduction::build_instance(golden::four_clause_formula());
  const auto report = reduction::verify_choice_patterns(out);
  const auto satisfying = out.formula.satisfying_assignments();
  std::size_t hits = 0;
  for (const auto& p : report.outcomes) {
    const bool expected = p.consistent && p.assignment && out.formula.satisfies(*p.assignment);
    o.require(p.meets_target == expected, "pattern outcome agrees with the formula");
    if (p.meets_target) ++hits;
  }
  o.require(report.outcomes.size() == 64, "all 4^3 patterns replayed");
  o.require(report.inconsistent_rounds_ok, "inconsistent rounds leave only h_x^2, h_negx^2");
  o.require(hits == satisfying.size(), "target hits equal satisfying assignments");
  o.require(report.satisfiable_by_patterns == !satisfying.empty(), "satisfiability agrees");
  o.note(std::to_string(hits) + " patterns reach the target, " +
         std::to_string(satisfying.size()) + " satisfying assignments");
}

void tiny_exhaustive(Outcome& o) {
  testing::Rng rng(11);
  std::size_t mismatches = 0;
  const int count = 40;
  for (int i = 0; i < count; ++i) {
    const Instance inst = testing::random_instance_between(rng, testing::uniform(rng, 2, 3), 1, 5);
    const AgentId agent{static_cast<std::uint32_t>(testing::uniform(rng, 0, inst.num_agents() - 1))};
    std::set<Bundle> expected;
    for (const auto& b : testing::all_report_bundles(inst, static_cast<int>(agent.index))) {
      expected.insert(testing::to_bundle(b));
    }
    if (oracle::enumerate_achievable_bundles(inst, agent) != expected) ++mismatches;
  }
  o.note(std::to_string(count) + " instances, " + std::to_string(mismatches) + " mismatches");
  o.require(mismatches == 0, "oracle enumeration equals all-reports replay");
}

int run() {
  const std::vector<Criterion> criteria = {
      {"AC1", "example 1 allocation", 1, example_one},
      {"AC2", "three-agent counterexample", 10, counterexample},
      {"AC3", "achievable bundles of the counterexample", 10, achievable_set},
      {"AC4", "two-agent best response equals oracle", 30'000, two_agent_correctness},
      {"AC5", "two-agent best response is unique", 0, uniqueness},
      {"AC6", "achievability characterization", 0, characterization},
      {"AC7", "exchange property", 0, exchange},
      {"AC8", "reduction structure and utility ledger", 1'000, reduction_structure},
      {"AC9", "reduction forward replay and tables", 1'000, reduction_forward},
      {"AC10", "reduction choice patterns", 10'000, reduction_patterns},
      {"AC11", "tiny-instance exhaustiveness", 60'000, tiny_exhaustive},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    Outcome outcome;
    const auto start = Clock::now();
    try {
      c.body(outcome);
    } catch (const std::exception& e) {
      outcome.require(false, std::string("exception: ") + e.what());
    }
    const double ms = Millis(Clock::now() - start).count();
    if (c.limit_ms > 0 && ms >= c.limit_ms) {
      outcome.require(false, "took " + std::to_string(ms) + " ms, limit " +
                                 std::to_string(c.limit_ms) + " ms");
    }
    std::printf("%s %s %s (%.3f ms)\n", outcome.passed ? "PASS" : "FAIL", c.id, c.title, ms);
    for (const std::string& d : outcome.details) std::printf("    %s\n", d.c_str());
    if (!outcome.passed) ++failures;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}

}  // namespace
}  // namespace seqalloc

int main() { return seqalloc::run(); }
