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

// Exact polynomial-time manipulation for two agents.
//
// With a single opponent, a target set S is obtainable by some report iff it
// is obtained by the canonical report: S ranked in the opponent's order,
// followed by everything else. Growing S greedily along the manipulator's true
// order then yields the lexicographically best obtainable bundle, and that
// bundle is optimal for every additive utility consistent with the true order.

#ifndef SEQALLOC_TWO_AGENT_HPP_
#define SEQALLOC_TWO_AGENT_HPP_

#include <stdexcept>
#include <vector>

#include "seqalloc/model.hpp"

namespace seqalloc::two_agent {

// Thrown when an operation that needs exactly two agents gets another count.
class UnsupportedInstance : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class MissingUtilities : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// `target` ordered by the opponent's preference, then the remaining items in
// id order. Throws ValidationError if `target` names an item >= num_items.
Preference canonical_report(const Bundle& target, const Preference& opponent_pref,
                            std::size_t num_items);

// "Some report gives the manipulator a bundle containing `target`", decided
// by replaying the canonical report.
bool is_achievable(const Bundle& target, const Instance& instance, AgentId manipulator);

// The same question answered from the canonical-report trace without looking
// at what the manipulator received: at the stage of the manipulator's i-th
// pick, every item the opponent already holds must be strictly preferred by
// the opponent to the i-th target item.
bool achievability_certificate(const Bundle& target, const Instance& instance,
                               AgentId manipulator);

struct LexicographicResponse {
  Preference report;
  Bundle bundle;
  // Items tried in true-preference order, with the verdict for each.
  std::vector<std::pair<ItemId, bool>> decisions;
};

LexicographicResponse lexicographic_best_response(const Instance& instance, AgentId manipulator);

struct BestResponse {
  Preference report;
  Bundle bundle;
  Rational utility;
};

// `utilities` must be consistent with the manipulator's preference in
// `instance` (throws InconsistentUtility otherwise).
BestResponse best_response(const Instance& instance, const UtilityProfile& utilities,
                           AgentId manipulator);

struct AgentEvidence {
  AgentId agent;
  Bundle current_bundle;
  Rational current_utility;
  BestResponse deviation;
  bool improves = false;
};

struct NashVerdict {
  bool equilibrium = false;
  std::vector<AgentEvidence> agents;
};

// `instance` holds the reported profile; `utilities` are the agents' true
// values, which need not agree with the reports. Each agent's best response is
// computed for its true order against the other's fixed report.
NashVerdict verify_nash_two_agents(const Instance& instance, const UtilityProfile& utilities);

}  // namespace seqalloc::two_agent

#endif  // SEQALLOC_TWO_AGENT_HPP_
