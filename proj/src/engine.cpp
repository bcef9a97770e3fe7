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

#include "seqalloc/engine.hpp"

#include <vector>

namespace seqalloc {

namespace {

Allocation allocate(const Instance& instance, const Preference* override_pref,
                    AgentId override_agent) {
  Allocation out(instance.num_agents(), instance.num_items());
  std::vector<bool> taken(instance.num_items(), false);
  // Items only ever leave the pool, so each agent's cursor moves forward.
  std::vector<std::size_t> cursor(instance.num_agents(), 0);

  const auto sequence = instance.sequence();
  for (std::size_t stage = 0; stage < sequence.size(); ++stage) {
    const AgentId agent = sequence[stage];
    const Preference& pref = (override_pref != nullptr && agent == override_agent)
                                 ? *override_pref
                                 : instance.preference(agent);
    std::size_t& pos = cursor[agent.index];
    while (taken[pref[pos].index]) ++pos;
    const ItemId item = pref[pos];
    taken[item.index] = true;
    out.record(Pick{stage, agent, item});
  }
  return out;
}

}  // namespace

Allocation run_sequential_allocation(const Instance& instance) {
  return allocate(instance, nullptr, AgentId{});
}

Allocation run_with_report(const Instance& instance, AgentId agent, const Preference& report) {
  if (agent.index >= instance.num_agents()) throw std::out_of_range("unknown agent index");
  if (!is_permutation_of_items(report, instance.num_items())) {
    throw ValidationError({"report for agent '" + instance.agent_name(agent) +
                           "' is not a permutation of the item set"});
  }
  return allocate(instance, &report, agent);
}

}  // namespace seqalloc
