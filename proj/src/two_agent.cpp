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

#include "seqalloc/two_agent.hpp"

#include <algorithm>

#include "seqalloc/engine.hpp"

namespace seqalloc::two_agent {

namespace {

AgentId opponent_of(const Instance& instance, AgentId manipulator) {
  if (instance.num_agents() != 2) {
    throw UnsupportedInstance("two-agent algorithm called on an instance with " +
                              std::to_string(instance.num_agents()) + " agents");
  }
  if (manipulator.index > 1) throw std::out_of_range("unknown agent index");
  return AgentId{1 - manipulator.index};
}

// Target items ordered by the opponent's preference.
std::vector<ItemId> ordered_by(const Bundle& target, const Instance& instance, AgentId opponent) {
  std::vector<ItemId> out(target.begin(), target.end());
  std::sort(out.begin(), out.end(),
            [&](ItemId a, ItemId b) { return instance.prefers(opponent, a, b); });
  return out;
}

void check_items(const Bundle& target, std::size_t num_items) {
  for (ItemId item : target) {
    if (item.index >= num_items) {
      throw ValidationError({"target names unknown item index " + std::to_string(item.index)});
    }
  }
}

}  // namespace

Preference canonical_report(const Bundle& target, const Preference& opponent_pref,
                            std::size_t num_items) {
  check_items(target, num_items);
  Preference report;
  report.reserve(num_items);
  for (ItemId item : opponent_pref) {
    if (target.contains(item)) report.push_back(item);
  }
  if (report.size() != target.size()) {
    throw ValidationError({"opponent preference does not cover the target set"});
  }
  for (std::uint32_t i = 0; i < num_items; ++i) {
    if (!target.contains(ItemId{i})) report.push_back(ItemId{i});
  }
  return report;
}

bool is_achievable(const Bundle& target, const Instance& instance, AgentId manipulator) {
  const AgentId opponent = opponent_of(instance, manipulator);
  check_items(target, instance.num_items());
  if (target.size() > instance.turns(manipulator)) return false;
  const Preference report =
      canonical_report(target, instance.preference(opponent), instance.num_items());
  const Bundle got = run_with_report(instance, manipulator, report).bundle(manipulator);
  return std::includes(got.begin(), got.end(), target.begin(), target.end());
}

bool achievability_certificate(const Bundle& target, const Instance& instance,
                               AgentId manipulator) {
  const AgentId opponent = opponent_of(instance, manipulator);
  check_items(target, instance.num_items());
  const std::vector<ItemId> ordered = ordered_by(target, instance, opponent);
  const Preference report =
      canonical_report(target, instance.preference(opponent), instance.num_items());
  const Allocation allocation = run_with_report(instance, manipulator, report);

  std::vector<ItemId> opponent_held;
  std::size_t i = 0;
  for (const Pick& pick : allocation.trace()) {
    if (pick.agent == opponent) {
      opponent_held.push_back(pick.item);
      continue;
    }
    if (i == ordered.size()) break;
    const ItemId wanted = ordered[i++];
    for (ItemId held : opponent_held) {
      if (!instance.prefers(opponent, held, wanted)) return false;
    }
  }
  // Fewer manipulator turns than target items.
  return i == ordered.size();
}

LexicographicResponse lexicographic_best_response(const Instance& instance, AgentId manipulator) {
  const AgentId opponent = opponent_of(instance, manipulator);
  const std::size_t turns = instance.turns(manipulator);
  LexicographicResponse out;
  for (ItemId item : instance.preference(manipulator)) {
    if (out.bundle.size() == turns) break;
    Bundle candidate = out.bundle;
    candidate.insert(item);
    const bool keep = is_achievable(candidate, instance, manipulator);
    out.decisions.emplace_back(item, keep);
    if (keep) out.bundle = std::move(candidate);
  }
  out.report = canonical_report(out.bundle, instance.preference(opponent), instance.num_items());
  return out;
}

BestResponse best_response(const Instance& instance, const UtilityProfile& utilities,
                           AgentId manipulator) {
  opponent_of(instance, manipulator);
  require_consistent(utilities, manipulator, instance.preference(manipulator));
  LexicographicResponse lex = lexicographic_best_response(instance, manipulator);
  Rational utility = bundle_utility(utilities, manipulator, lex.bundle);
  return BestResponse{std::move(lex.report), std::move(lex.bundle), std::move(utility)};
}

NashVerdict verify_nash_two_agents(const Instance& instance, const UtilityProfile& utilities) {
  opponent_of(instance, AgentId{0});
  for (AgentId agent : instance.agents()) {
    if (!utilities.has(agent)) {
      throw MissingUtilities("missing utilities for agent '" + instance.agent_name(agent) + "'");
    }
  }

  const Allocation current = run_sequential_allocation(instance);
  NashVerdict verdict;
  verdict.equilibrium = true;
  for (AgentId agent : instance.agents()) {
    const Preference truth = preference_from_utilities(utilities.values(agent));
    const Instance deviated = instance.with_preference(agent, truth);
    AgentEvidence evidence{agent, current.bundle(agent),
                           bundle_utility(utilities, agent, current.bundle(agent)),
                           best_response(deviated, utilities, agent), false};
    evidence.improves = evidence.deviation.utility > evidence.current_utility;
    if (evidence.improves) verdict.equilibrium = false;
    verdict.agents.push_back(std::move(evidence));
  }
  return verdict;
}

}  // namespace seqalloc::two_agent
