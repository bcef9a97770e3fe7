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

#include "seqalloc/oracle.hpp"

#include <algorithm>

namespace seqalloc::oracle {

namespace {

class PickSearch {
 public:
  PickSearch(const Instance& instance, AgentId manipulator, SearchBudget budget)
      : instance_(instance),
        manipulator_(manipulator),
        budget_(budget),
        taken_(instance.num_items(), false) {
    if (manipulator.index >= instance.num_agents()) throw std::out_of_range("unknown agent index");
    const std::size_t turns = instance.turns(manipulator);
    if (turns > budget.max_turns) {
      throw BudgetExceeded("manipulator has " + std::to_string(turns) +
                           " turns, search limit is " + std::to_string(budget.max_turns));
    }
  }

  std::map<Bundle, Preference> run() {
    explore(0);
    return std::move(found_);
  }

 private:
  void count_node() {
    if (++nodes_ > budget_.max_nodes) {
      throw BudgetExceeded("search exceeded " + std::to_string(budget_.max_nodes) + " nodes");
    }
  }

  ItemId greedy_pick(AgentId agent) const {
    for (ItemId item : instance_.preference(agent)) {
      if (!taken_[item.index]) return item;
    }
    throw std::logic_error("no item left for a pick");
  }

  void explore(std::size_t stage) {
    count_node();
    const auto sequence = instance_.sequence();
    std::vector<ItemId> forced;
    while (stage < sequence.size() && sequence[stage] != manipulator_) {
      const ItemId item = greedy_pick(sequence[stage]);
      taken_[item.index] = true;
      forced.push_back(item);
      ++stage;
    }

    if (stage == sequence.size()) {
      record_leaf();
    } else {
      for (std::uint32_t i = 0; i < taken_.size(); ++i) {
        if (taken_[i]) continue;
        taken_[i] = true;
        picks_.push_back(ItemId{i});
        explore(stage + 1);
        picks_.pop_back();
        taken_[i] = false;
      }
    }

    for (ItemId item : forced) taken_[item.index] = false;
  }

  void record_leaf() {
    Bundle bundle(picks_.begin(), picks_.end());
    if (found_.contains(bundle)) return;
    Preference witness = picks_;
    for (std::uint32_t i = 0; i < taken_.size(); ++i) {
      if (!bundle.contains(ItemId{i})) witness.push_back(ItemId{i});
    }
    found_.emplace(std::move(bundle), std::move(witness));
  }

  const Instance& instance_;
  AgentId manipulator_;
  SearchBudget budget_;
  std::vector<bool> taken_;
  std::vector<ItemId> picks_;
  std::uint64_t nodes_ = 0;
  std::map<Bundle, Preference> found_;
};

}  // namespace

std::map<Bundle, Preference> achievable_with_witnesses(const Instance& instance,
                                                       AgentId manipulator,
                                                       SearchBudget budget) {
  return PickSearch(instance, manipulator, budget).run();
}

std::set<Bundle> enumerate_achievable_bundles(const Instance& instance, AgentId manipulator,
                                              SearchBudget budget) {
  std::set<Bundle> out;
  for (auto& [bundle, witness] : achievable_with_witnesses(instance, manipulator, budget)) {
    out.insert(bundle);
  }
  return out;
}

OracleResult brute_force_best_response(const Instance& instance, const UtilityProfile& utilities,
                                       AgentId manipulator, SearchBudget budget) {
  // Fail on missing utilities before spending time on the search.
  utilities.values(manipulator);
  OracleResult result;
  bool first = true;
  for (auto& [bundle, witness] : achievable_with_witnesses(instance, manipulator, budget)) {
    Rational value = bundle_utility(utilities, manipulator, bundle);
    if (first || value > result.max_utility) {
      result.max_utility = value;
      result.optima.clear();
      first = false;
    }
    if (value == result.max_utility) result.optima.push_back(OptimalBundle{bundle, witness});
  }
  return result;
}

Bundle refuted_greedy_best_response(const Instance& instance, AgentId manipulator,
                                    SearchBudget budget) {
  const std::set<Bundle> achievable = enumerate_achievable_bundles(instance, manipulator, budget);
  Bundle kept;
  for (ItemId item : instance.preference(manipulator)) {
    Bundle candidate = kept;
    candidate.insert(item);
    const bool contained = std::any_of(achievable.begin(), achievable.end(), [&](const Bundle& b) {
      return std::includes(b.begin(), b.end(), candidate.begin(), candidate.end());
    });
    if (contained) kept = std::move(candidate);
  }
  return kept;
}

}  // namespace seqalloc::oracle
