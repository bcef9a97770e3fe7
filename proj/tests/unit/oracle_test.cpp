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


#include <gtest/gtest.h>

#include "seqalloc/engine.hpp"
#include "seqalloc/golden.hpp"
#include "seqalloc/oracle.hpp"
#include "seqalloc/two_agent.hpp"
#include "support/random_instances.hpp"
#include "support/reference.hpp"

namespace seqalloc {
namespace {

Bundle named(const Instance& inst, std::initializer_list<const char*> names) {
  Bundle out;
  for (const char* n : names) out.insert(inst.item(n));
  return out;
}

UtilityProfile agent_one(const Instance& inst, std::vector<Rational> by_item) {
  return testing::utilities_for(inst, AgentId{0}, std::move(by_item));
}

TEST(Oracle, CounterexampleWithTieBreak) {
  const Instance inst = golden::counterexample_instance();
  const auto u = agent_one(inst, {Rational(31, 10), Rational(3), Rational(2), Rational(1)});
  const auto r = oracle::brute_force_best_response(inst, u, AgentId{0});
  EXPECT_EQ(r.max_utility, 5);
  ASSERT_EQ(r.optima.size(), 1u);
  EXPECT_EQ(r.optima[0].bundle, named(inst, {"b", "c"}));
  EXPECT_EQ(run_with_report(inst, AgentId{0}, r.optima[0].witness).bundle(AgentId{0}),
            named(inst, {"b", "c"}));
  EXPECT_EQ(bundle_utility(u, AgentId{0}, run_sequential_allocation(inst).bundle(AgentId{0})),
            Rational(41, 10));
}

TEST(Oracle, CounterexampleWithTiedOptima) {
  const Instance inst = golden::counterexample_instance();
  const auto u = agent_one(inst, {Rational(4), Rational(3), Rational(2), Rational(1)});
  const auto r = oracle::brute_force_best_response(inst, u, AgentId{0});
  EXPECT_EQ(r.max_utility, 5);
  ASSERT_EQ(r.optima.size(), 2u);
  EXPECT_EQ(r.optima[0].bundle, named(inst, {"a", "d"}));
  EXPECT_EQ(r.optima[1].bundle, named(inst, {"b", "c"}));
}

TEST(Oracle, RefutedGreedyMissesTheOptimum) {
  const Instance inst = golden::counterexample_instance();
  EXPECT_EQ(oracle::refuted_greedy_best_response(inst, AgentId{0}), named(inst, {"a", "d"}));
}

TEST(Oracle, ExhaustiveAgainstAllReports) {
  testing::Rng rng(31);
  for (int trial = 0; trial < 120; ++trial) {
    const Instance inst = testing::random_instance_between(rng, testing::uniform(rng, 1, 4), 1, 6);
    const AgentId agent{static_cast<std::uint32_t>(testing::uniform(rng, 0, inst.num_agents() - 1))};
    std::set<Bundle> expected;
    for (const auto& b : testing::all_report_bundles(inst, static_cast<int>(agent.index))) {
      expected.insert(testing::to_bundle(b));
    }
    const auto witnessed = oracle::achievable_with_witnesses(inst, agent);
    std::set<Bundle> got;
    for (const auto& [bundle, witness] : witnessed) {
      got.insert(bundle);
      EXPECT_EQ(run_with_report(inst, agent, witness).bundle(agent), bundle);
    }
    EXPECT_EQ(got, expected);
    EXPECT_EQ(oracle::enumerate_achievable_bundles(inst, agent), expected);
  }
}

TEST(Oracle, SingleAgentGetsItsTopItems) {
  const Instance inst = validate_instance(
      RawInstance{{"a", "b", "c"}, {"1"}, {{"c", "a", "b"}}, {"1", "1"}});
  const auto bundles = oracle::enumerate_achievable_bundles(inst, AgentId{0});
  // Alone, the agent can take any two items.
  EXPECT_EQ(bundles.size(), 3u);
  const auto u = make_lexicographic_utilities(inst);
  const auto r = oracle::brute_force_best_response(inst, u, AgentId{0});
  ASSERT_EQ(r.optima.size(), 1u);
  EXPECT_EQ(r.optima[0].bundle, named(inst, {"c", "a"}));
}

TEST(Oracle, BudgetIsEnforced) {
  testing::Rng rng(37);
  Instance inst = testing::random_instance(rng, 2, 12, 12);
  RawInstance raw = inst.to_raw();
  raw.sequence.assign(12, "1");
  inst = validate_instance(raw);
  EXPECT_THROW(oracle::enumerate_achievable_bundles(inst, AgentId{0}, {.max_turns = 2}),
               oracle::BudgetExceeded);
  EXPECT_THROW(oracle::enumerate_achievable_bundles(inst, AgentId{0}, {.max_nodes = 10}),
               oracle::BudgetExceeded);
}

TEST(Oracle, RefutedGreedyEqualsLexicographicForTwoAgents) {
  testing::Rng rng(41);
  for (int trial = 0; trial < 100; ++trial) {
    const Instance inst = testing::random_instance_between(rng, 2, 1, 8);
    EXPECT_EQ(oracle::refuted_greedy_best_response(inst, AgentId{0}),
              two_agent::lexicographic_best_response(inst, AgentId{0}).bundle);
  }
}

TEST(Oracle, AcceptsUtilitiesThatDisagreeWithTheRanking) {
  // The search is over picks, so any additive valuation works.
  const Instance inst = golden::counterexample_instance();
  const auto u = agent_one(inst, {Rational(1), Rational(3), Rational(2), Rational(4)});
  const auto r = oracle::brute_force_best_response(inst, u, AgentId{0});
  Rational best = 0;
  for (const auto& b : testing::all_report_bundles(inst, 0)) {
    best = std::max(best, bundle_utility(u, AgentId{0}, testing::to_bundle(b)));
  }
  EXPECT_EQ(r.max_utility, best);
}

}  // namespace
}  // namespace seqalloc
