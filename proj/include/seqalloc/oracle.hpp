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

// Exponential-time ground truth for any number of agents.
//
// The search branches over the manipulator's picks rather than over its m!
// reports: a report only matters through the item it yields at each of the
// manipulator's turns, and any feasible pick sequence p1..pk is realized by
// the report "p1 .. pk, then everything else". Everyone else picks greedily
// between the manipulator's turns.

#ifndef SEQALLOC_ORACLE_HPP_
#define SEQALLOC_ORACLE_HPP_

#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "seqalloc/model.hpp"

namespace seqalloc::oracle {

struct SearchBudget {
  std::size_t max_turns = 16;
  std::uint64_t max_nodes = 20'000'000;
};

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct OptimalBundle {
  Bundle bundle;
  // Replaying this report through the engine yields `bundle`.
  Preference witness;
};

struct OracleResult {
  Rational max_utility;
  // Every argmax bundle, ordered by bundle.
  std::vector<OptimalBundle> optima;
};

// Every obtainable bundle with the first witness report found for it.
// Exploration is in item-id order, so the witnesses are deterministic.
std::map<Bundle, Preference> achievable_with_witnesses(const Instance& instance,
                                                       AgentId manipulator,
                                                       SearchBudget budget = {});

std::set<Bundle> enumerate_achievable_bundles(const Instance& instance, AgentId manipulator,
                                              SearchBudget budget = {});

OracleResult brute_force_best_response(const Instance& instance, const UtilityProfile& utilities,
                                       AgentId manipulator, SearchBudget budget = {});

// The greedy that is only correct for two agents: scan the manipulator's true
// order and keep an item whenever the kept set plus that item is contained in
// some obtainable bundle. For n >= 3 it can miss the optimum.
Bundle refuted_greedy_best_response(const Instance& instance, AgentId manipulator,
                                    SearchBudget budget = {});

}  // namespace seqalloc::oracle

#endif  // SEQALLOC_ORACLE_HPP_
