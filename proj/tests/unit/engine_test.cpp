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
#include "support/random_instances.hpp"
#include "support/reference.hpp"

namespace seqalloc {
namespace {

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

TEST(Engine, ExampleOne) {
  const Instance inst = golden::example1_instance();
  const Allocation a = run_sequential_allocation(inst);
  EXPECT_EQ(a.bundle(inst.agent("1")), named(inst, {"o1", "o4"}));
  EXPECT_EQ(a.bundle(inst.agent("2")), named(inst, {"o2", "o3"}));
  EXPECT_EQ(a.matrix(), (std::vector<std::vector<int>>{{1, 0, 0, 1}, {0, 1, 1, 0}}));
  ASSERT_EQ(a.trace().size(), 4u);
  EXPECT_EQ(a.trace()[1], (Pick{1, inst.agent("2"), inst.item("o3")}));
}

TEST(Engine, SingleAgentTakesEverythingInOrder) {
  const Instance inst = validate_instance(
      RawInstance{{"w", "x", "y", "z"}, {"1"}, {{"y", "w", "z", "x"}}, {"1", "1", "1", "1"}});
  const Allocation a = run_sequential_allocation(inst);
  EXPECT_EQ(a.bundle(AgentId{0}).size(), 4u);
  std::vector<ItemId> order;
  for (const Pick& p : a.trace()) order.push_back(p.item);
  EXPECT_EQ(order, inst.preference(AgentId{0}));
}

TEST(Engine, CounterexampleTruthfulAndMisreport) {
  const Instance inst = golden::counterexample_instance();
  const AgentId one = inst.agent("1");
  EXPECT_EQ(run_sequential_allocation(inst).bundle(one), named(inst, {"a", "d"}));
  EXPECT_EQ(run_with_report(inst, one, inst.preference(one)).bundle(one), named(inst, {"a", "d"}));
  EXPECT_EQ(run_with_report(inst, one, ranked(inst, {"c", "b", "a", "d"})).bundle(one),
            named(inst, {"b", "c"}));
}

TEST(Engine, RejectsNonPermutationReport) {
  const Instance inst = golden::counterexample_instance();
  EXPECT_THROW(run_with_report(inst, AgentId{0}, ranked(inst, {"a", "b", "c"})), ValidationError);
  EXPECT_THROW(run_with_report(inst, AgentId{0}, ranked(inst, {"a", "a", "c", "d"})),
               ValidationError);
}

TEST(Engine, ShortSequenceLeavesItemsUnallocated) {
  const Instance inst = validate_instance(
      RawInstance{{"a", "b", "c"}, {"1", "2"}, {{"a", "b", "c"}, {"a", "c", "b"}}, {"2"}});
  const Allocation a = run_sequential_allocation(inst);
  EXPECT_EQ(a.trace().size(), 1u);
  EXPECT_EQ(a.unallocated(), named(inst, {"b", "c"}));
  EXPECT_FALSE(a.owner(inst.item("b")).has_value());
}

TEST(Engine, MatchesReferenceAndPickOptimality) {
  testing::Rng rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    const Instance inst = testing::random_instance_between(rng, testing::uniform(rng, 1, 4), 1, 10);
    const Allocation a = run_sequential_allocation(inst);
    const auto expected = testing::reference_allocate(
        testing::int_profile(inst), testing::int_sequence(inst), inst.num_items());
    for (AgentId agent : inst.agents()) {
      EXPECT_EQ(testing::to_int(a.bundle(agent)), expected[agent.index]);
      EXPECT_EQ(a.bundle(agent).size(), inst.turns(agent));
    }
    ASSERT_EQ(a.trace().size(), inst.sequence_length());

    std::vector<bool> taken(inst.num_items(), false);
    for (const Pick& p : a.trace()) {
      for (ItemId other : inst.items()) {
        if (!taken[other.index] && other != p.item) {
          EXPECT_FALSE(inst.prefers(p.agent, other, p.item));
        }
      }
      taken[p.item.index] = true;
    }
    EXPECT_EQ(run_sequential_allocation(inst), a);
  }
}

TEST(Engine, ReorderingUnpickedItemsChangesNothing) {
  testing::Rng rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const Instance inst = testing::random_instance_between(rng, testing::uniform(rng, 2, 4), 2, 9);
    const AgentId agent{static_cast<std::uint32_t>(testing::uniform(rng, 0, inst.num_agents() - 1))};
    const Allocation before = run_sequential_allocation(inst);
    const Bundle& picked = before.bundle(agent);

    // Everything ranked below the agent's last pick is never picked; its
    // order must not matter. (Moving an unpicked item above a pick can.)
    Preference report = inst.preference(agent);
    std::size_t last = 0;
    for (std::size_t i = 0; i < report.size(); ++i) {
      if (picked.contains(report[i])) last = i + 1;
    }
    std::shuffle(report.begin() + static_cast<std::ptrdiff_t>(last), report.end(), rng);

    EXPECT_EQ(run_with_report(inst, agent, report).bundles(), before.bundles());
  }
}

}  // namespace
}  // namespace seqalloc
