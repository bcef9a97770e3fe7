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

// Domain types for sequential allocation: agents, items, strict preference
// profiles, picking sequences, additive utilities and allocations.
//
// An Instance can only be obtained through validation, so every function that
// takes one may assume its invariants: every preference list is a permutation
// of the item set, the sequence names known agents and is no longer than the
// number of items.

#ifndef SEQALLOC_MODEL_HPP_
#define SEQALLOC_MODEL_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "seqalloc/rational.hpp"

namespace seqalloc {

struct ItemId {
  std::uint32_t index = 0;
  auto operator<=>(const ItemId&) const = default;
};

struct AgentId {
  std::uint32_t index = 0;
  auto operator<=>(const AgentId&) const = default;
};

// Most preferred first.
using Preference = std::vector<ItemId>;
using Bundle = std::set<ItemId>;

// Raised with the full list of violated invariants, not just the first.
class ValidationError : public std::invalid_argument {
 public:
  explicit ValidationError(std::vector<std::string> diagnostics);
  const std::vector<std::string>& diagnostics() const { return diagnostics_; }

 private:
  std::vector<std::string> diagnostics_;
};

// Name-based, unvalidated instance data as read from a file or written by hand.
struct RawInstance {
  std::vector<std::string> items;
  std::vector<std::string> agents;
  // preferences[i] belongs to agents[i].
  std::vector<std::vector<std::string>> preferences;
  std::vector<std::string> sequence;
};

class Instance {
 public:
  std::size_t num_items() const { return item_names_.size(); }
  std::size_t num_agents() const { return agent_names_.size(); }
  std::size_t sequence_length() const { return sequence_.size(); }

  const std::string& item_name(ItemId item) const { return item_names_.at(item.index); }
  const std::string& agent_name(AgentId agent) const { return agent_names_.at(agent.index); }
  std::optional<ItemId> find_item(std::string_view name) const;
  std::optional<AgentId> find_agent(std::string_view name) const;
  // Throws std::out_of_range for unknown names.
  ItemId item(std::string_view name) const;
  AgentId agent(std::string_view name) const;

  const Preference& preference(AgentId agent) const { return profile_.at(agent.index); }
  const std::vector<Preference>& profile() const { return profile_; }
  std::span<const AgentId> sequence() const { return sequence_; }

  // Position of `item` in the agent's list; 0 is the top choice.
  std::size_t rank(AgentId agent, ItemId item) const {
    return ranks_[agent.index][item.index];
  }
  bool prefers(AgentId agent, ItemId a, ItemId b) const { return rank(agent, a) < rank(agent, b); }

  // Number of occurrences of `agent` in the picking sequence.
  std::size_t turns(AgentId agent) const;

  // All items in id order, which is the canonical global order.
  std::vector<ItemId> items() const;
  std::vector<AgentId> agents() const;

  // Copy with one agent's preference replaced. Throws ValidationError if
  // `report` is not a permutation of the item set.
  Instance with_preference(AgentId agent, Preference report) const;

  RawInstance to_raw() const;

  std::string format_bundle(const Bundle& bundle) const;
  std::string format_preference(const Preference& pref) const;

  friend bool operator==(const Instance& a, const Instance& b) {
    return a.item_names_ == b.item_names_ && a.agent_names_ == b.agent_names_ &&
           a.profile_ == b.profile_ && a.sequence_ == b.sequence_;
  }

 private:
  friend Instance make_instance(std::vector<std::string>, std::vector<std::string>,
                                std::vector<Preference>, std::vector<AgentId>);

  std::vector<std::string> item_names_;
  std::vector<std::string> agent_names_;
  std::vector<Preference> profile_;
  std::vector<AgentId> sequence_;
  std::vector<std::vector<std::size_t>> ranks_;
  std::unordered_map<std::string, ItemId> item_lookup_;
  std::unordered_map<std::string, AgentId> agent_lookup_;
};

// Validates name-based data. Throws ValidationError listing every problem:
// duplicate ids, preference lists that are not permutations, unknown agents in
// the sequence, a sequence longer than the item count.
Instance validate_instance(const RawInstance& raw);

// Id-based construction with the same checks.
Instance make_instance(std::vector<std::string> item_names, std::vector<std::string> agent_names,
                       std::vector<Preference> profile, std::vector<AgentId> sequence);

// True iff `pref` lists each of the num_items items exactly once.
bool is_permutation_of_items(const Preference& pref, std::size_t num_items);

// Per-agent additive utilities. Agents may be left without utilities; the
// operations that need them check has().
class UtilityProfile {
 public:
  UtilityProfile() = default;
  UtilityProfile(std::size_t num_agents, std::size_t num_items);

  // `by_item[o]` is the agent's value for item o. Throws ValidationError when a
  // value is not strictly positive or the size is wrong.
  void set(AgentId agent, std::vector<Rational> by_item);
  bool has(AgentId agent) const;
  const Rational& value(AgentId agent, ItemId item) const;
  const std::vector<Rational>& values(AgentId agent) const;

  std::size_t num_agents() const { return values_.size(); }
  std::size_t num_items() const { return num_items_; }

 private:
  std::size_t num_items_ = 0;
  std::vector<std::optional<std::vector<Rational>>> values_;
};

class InconsistentUtility : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Canonical lexicographic values: the k-th ranked of m items gets 2^(m-k), so
// every item outweighs the sum of all items ranked below it. Indexed by item.
std::vector<Rational> make_lexicographic_utilities(const Preference& pref);
UtilityProfile make_lexicographic_utilities(const Instance& instance);

// Exact additive utility. Throws std::out_of_range for an item outside the
// item set and std::invalid_argument when the agent has no utilities.
Rational bundle_utility(const UtilityProfile& utilities, AgentId agent, const Bundle& bundle);

// u(o) > u(o') iff o is ranked above o' in `pref`, and every value positive.
bool is_consistent(const std::vector<Rational>& by_item, const Preference& pref);
void require_consistent(const UtilityProfile& utilities, AgentId agent, const Preference& pref);

// The strict ordinal preference induced by the values (highest first). Throws
// InconsistentUtility when two items tie.
Preference preference_from_utilities(const std::vector<Rational>& by_item);

struct Pick {
  std::size_t stage = 0;  // 0-based position in the sequence
  AgentId agent;
  ItemId item;
  bool operator==(const Pick&) const = default;
};

class Allocation {
 public:
  Allocation(std::size_t num_agents, std::size_t num_items);

  void record(const Pick& pick);

  const Bundle& bundle(AgentId agent) const { return bundles_.at(agent.index); }
  const std::vector<Bundle>& bundles() const { return bundles_; }
  const std::vector<Pick>& trace() const { return trace_; }
  // Items left over when the sequence is shorter than the item set.
  Bundle unallocated() const;
  std::optional<AgentId> owner(ItemId item) const { return owner_.at(item.index); }

  // n x m 0/1 assignment matrix; every allocated item's column sums to 1.
  std::vector<std::vector<int>> matrix() const;

  bool operator==(const Allocation&) const = default;

 private:
  std::vector<Bundle> bundles_;
  std::vector<Pick> trace_;
  std::vector<std::optional<AgentId>> owner_;
};

}  // namespace seqalloc

#endif  // SEQALLOC_MODEL_HPP_
