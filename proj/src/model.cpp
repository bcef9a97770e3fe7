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

#include "seqalloc/model.hpp"

#include <algorithm>

namespace seqalloc {

namespace {

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += "; ";
    out += parts[i];
  }
  return out;
}

void check_profile(const std::vector<std::string>& agent_names, std::size_t num_items,
                   const std::vector<Preference>& profile, std::vector<std::string>& errors) {
  for (std::size_t a = 0; a < profile.size(); ++a) {
    const Preference& pref = profile[a];
    std::vector<int> seen(num_items, 0);
    bool out_of_range = false;
    for (ItemId item : pref) {
      if (item.index >= num_items) {
        out_of_range = true;
      } else {
        ++seen[item.index];
      }
    }
    const std::string& who = a < agent_names.size() ? agent_names[a] : std::to_string(a);
    if (out_of_range) errors.push_back("preference of agent '" + who + "' names an unknown item");
    if (std::any_of(seen.begin(), seen.end(), [](int c) { return c > 1; })) {
      errors.push_back("duplicate item in preference of agent '" + who + "'");
    }
    if (std::any_of(seen.begin(), seen.end(), [](int c) { return c == 0; })) {
      errors.push_back("incomplete preference for agent '" + who + "' (" +
                       std::to_string(std::count_if(seen.begin(), seen.end(),
                                                    [](int c) { return c > 0; })) +
                       " of " + std::to_string(num_items) + " items)");
    }
  }
}

template <typename Id>
void check_unique_names(const std::vector<std::string>& names, std::string_view kind,
                        std::unordered_map<std::string, Id>& lookup,
                        std::vector<std::string>& errors) {
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (names[i].empty()) {
      errors.push_back("empty " + std::string(kind) + " name");
      continue;
    }
    auto [it, inserted] = lookup.emplace(names[i], Id{static_cast<std::uint32_t>(i)});
    if (!inserted) errors.push_back("duplicate " + std::string(kind) + " id '" + names[i] + "'");
  }
}

}  // namespace

ValidationError::ValidationError(std::vector<std::string> diagnostics)
    : std::invalid_argument(join(diagnostics)), diagnostics_(std::move(diagnostics)) {}

std::optional<ItemId> Instance::find_item(std::string_view name) const {
  auto it = item_lookup_.find(std::string(name));
  if (it == item_lookup_.end()) return std::nullopt;
  return it->second;
}

std::optional<AgentId> Instance::find_agent(std::string_view name) const {
  auto it = agent_lookup_.find(std::string(name));
  if (it == agent_lookup_.end()) return std::nullopt;
  return it->second;
}

ItemId Instance::item(std::string_view name) const {
  if (auto id = find_item(name)) return *id;
  throw std::out_of_range("unknown item '" + std::string(name) + "'");
}

AgentId Instance::agent(std::string_view name) const {
  if (auto id = find_agent(name)) return *id;
  throw std::out_of_range("unknown agent '" + std::string(name) + "'");
}

std::size_t Instance::turns(AgentId agent) const {
  return static_cast<std::size_t>(std::count(sequence_.begin(), sequence_.end(), agent));
}

std::vector<ItemId> Instance::items() const {
  std::vector<ItemId> out(num_items());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = ItemId{static_cast<std::uint32_t>(i)};
  return out;
}

std::vector<AgentId> Instance::agents() const {
  std::vector<AgentId> out(num_agents());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = AgentId{static_cast<std::uint32_t>(i)};
  return out;
}

Instance Instance::with_preference(AgentId agent, Preference report) const {
  if (agent.index >= num_agents()) throw std::out_of_range("unknown agent index");
  if (!is_permutation_of_items(report, num_items())) {
    throw ValidationError({"report for agent '" + agent_name(agent) +
                           "' is not a permutation of the item set"});
  }
  Instance copy = *this;
  for (std::size_t r = 0; r < report.size(); ++r) copy.ranks_[agent.index][report[r].index] = r;
  copy.profile_[agent.index] = std::move(report);
  return copy;
}

RawInstance Instance::to_raw() const {
  RawInstance raw;
  raw.items = item_names_;
  raw.agents = agent_names_;
  for (const Preference& pref : profile_) {
    std::vector<std::string> names;
    names.reserve(pref.size());
    for (ItemId item : pref) names.push_back(item_name(item));
    raw.preferences.push_back(std::move(names));
  }
  for (AgentId agent : sequence_) raw.sequence.push_back(agent_name(agent));
  return raw;
}

std::string Instance::format_bundle(const Bundle& bundle) const {
  std::string out = "{";
  bool first = true;
  for (ItemId item : bundle) {
    if (!first) out += ",";
    out += item_name(item);
    first = false;
  }
  return out + "}";
}

std::string Instance::format_preference(const Preference& pref) const {
  std::string out;
  for (std::size_t i = 0; i < pref.size(); ++i) {
    if (i) out += " ";
    out += item_name(pref[i]);
  }
  return out;
}

bool is_permutation_of_items(const Preference& pref, std::size_t num_items) {
  if (pref.size() != num_items) return false;
  std::vector<bool> seen(num_items, false);
  for (ItemId item : pref) {
    if (item.index >= num_items || seen[item.index]) return false;
    seen[item.index] = true;
  }
  return true;
}

Instance make_instance(std::vector<std::string> item_names, std::vector<std::string> agent_names,
                       std::vector<Preference> profile, std::vector<AgentId> sequence) {
  std::vector<std::string> errors;
  Instance inst;
  check_unique_names(item_names, "item", inst.item_lookup_, errors);
  check_unique_names(agent_names, "agent", inst.agent_lookup_, errors);
  if (item_names.empty()) errors.push_back("instance has no items");
  if (agent_names.empty()) errors.push_back("instance has no agents");
  if (profile.size() != agent_names.size()) {
    errors.push_back("expected " + std::to_string(agent_names.size()) +
                     " preference lists, got " + std::to_string(profile.size()));
  }
  check_profile(agent_names, item_names.size(), profile, errors);
  for (AgentId agent : sequence) {
    if (agent.index >= agent_names.size()) {
      errors.push_back("sequence references unknown agent index " + std::to_string(agent.index));
    }
  }
  if (sequence.empty()) errors.push_back("empty picking sequence");
  if (sequence.size() > item_names.size()) {
    errors.push_back("sequence exceeds item count (" + std::to_string(sequence.size()) + " > " +
                     std::to_string(item_names.size()) + ")");
  }
  if (!errors.empty()) throw ValidationError(std::move(errors));

  inst.item_names_ = std::move(item_names);
  inst.agent_names_ = std::move(agent_names);
  inst.profile_ = std::move(profile);
  inst.sequence_ = std::move(sequence);
  inst.ranks_.assign(inst.profile_.size(), std::vector<std::size_t>(inst.item_names_.size()));
  for (std::size_t a = 0; a < inst.profile_.size(); ++a) {
    for (std::size_t r = 0; r < inst.profile_[a].size(); ++r) {
      inst.ranks_[a][inst.profile_[a][r].index] = r;
    }
  }
  return inst;
}

Instance validate_instance(const RawInstance& raw) {
  std::vector<std::string> errors;
  std::unordered_map<std::string, ItemId> items;
  std::unordered_map<std::string, AgentId> agents;
  check_unique_names(raw.items, "item", items, errors);
  check_unique_names(raw.agents, "agent", agents, errors);

  std::vector<Preference> profile;
  for (std::size_t a = 0; a < raw.preferences.size(); ++a) {
    Preference pref;
    for (const std::string& name : raw.preferences[a]) {
      auto it = items.find(name);
      if (it == items.end()) {
        errors.push_back("preference of agent '" +
                         (a < raw.agents.size() ? raw.agents[a] : std::to_string(a)) +
                         "' names unknown item '" + name + "'");
      } else {
        pref.push_back(it->second);
      }
    }
    profile.push_back(std::move(pref));
  }

  std::vector<AgentId> sequence;
  for (const std::string& name : raw.sequence) {
    auto it = agents.find(name);
    if (it == agents.end()) {
      errors.push_back("sequence references unknown agent '" + name + "'");
    } else {
      sequence.push_back(it->second);
    }
  }

  if (errors.empty()) {
    return make_instance(raw.items, raw.agents, std::move(profile), std::move(sequence));
  }
  // Name resolution failed; still collect the structural problems so the
  // caller sees every violation at once.
  try {
    make_instance(raw.items, raw.agents, std::move(profile), std::move(sequence));
  } catch (const ValidationError& e) {
    for (const std::string& d : e.diagnostics()) {
      if (d.rfind("sequence exceeds item count", 0) == 0) continue;
      if (std::find(errors.begin(), errors.end(), d) == errors.end()) errors.push_back(d);
    }
  }
  if (raw.sequence.size() > raw.items.size()) {
    errors.push_back("sequence exceeds item count (" + std::to_string(raw.sequence.size()) +
                     " > " + std::to_string(raw.items.size()) + ")");
  }
  throw ValidationError(std::move(errors));
}

UtilityProfile::UtilityProfile(std::size_t num_agents, std::size_t num_items)
    : num_items_(num_items), values_(num_agents) {}

void UtilityProfile::set(AgentId agent, std::vector<Rational> by_item) {
  if (agent.index >= values_.size()) throw std::out_of_range("unknown agent index");
  std::vector<std::string> errors;
  if (by_item.size() != num_items_) {
    errors.push_back("expected " + std::to_string(num_items_) + " utilities, got " +
                     std::to_string(by_item.size()));
  }
  for (std::size_t i = 0; i < by_item.size(); ++i) {
    if (by_item[i] <= 0) {
      errors.push_back("utility of item " + std::to_string(i) + " is not positive");
    }
  }
  if (!errors.empty()) throw ValidationError(std::move(errors));
  values_[agent.index] = std::move(by_item);
}

bool UtilityProfile::has(AgentId agent) const {
  return agent.index < values_.size() && values_[agent.index].has_value();
}

const Rational& UtilityProfile::value(AgentId agent, ItemId item) const {
  return values(agent).at(item.index);
}

const std::vector<Rational>& UtilityProfile::values(AgentId agent) const {
  if (!has(agent)) {
    throw std::invalid_argument("no utilities for agent index " + std::to_string(agent.index));
  }
  return *values_[agent.index];
}

std::vector<Rational> make_lexicographic_utilities(const Preference& pref) {
  std::vector<Rational> by_item(pref.size());
  BigInt value = 1;
  for (std::size_t k = pref.size(); k-- > 0;) {
    by_item.at(pref[k].index) = Rational(value);
    value *= 2;
  }
  return by_item;
}

UtilityProfile make_lexicographic_utilities(const Instance& instance) {
  UtilityProfile out(instance.num_agents(), instance.num_items());
  for (AgentId agent : instance.agents()) {
    out.set(agent, make_lexicographic_utilities(instance.preference(agent)));
  }
  return out;
}

Rational bundle_utility(const UtilityProfile& utilities, AgentId agent, const Bundle& bundle) {
  const std::vector<Rational>& values = utilities.values(agent);
  Rational total = 0;
  for (ItemId item : bundle) {
    if (item.index >= values.size()) {
      throw std::out_of_range("unknown item index " + std::to_string(item.index));
    }
    total += values[item.index];
  }
  return total;
}

bool is_consistent(const std::vector<Rational>& by_item, const Preference& pref) {
  if (!is_permutation_of_items(pref, by_item.size())) return false;
  for (std::size_t k = 0; k < pref.size(); ++k) {
    const Rational& v = by_item[pref[k].index];
    if (v <= 0) return false;
    if (k + 1 < pref.size() && !(v > by_item[pref[k + 1].index])) return false;
  }
  return true;
}

void require_consistent(const UtilityProfile& utilities, AgentId agent, const Preference& pref) {
  if (!is_consistent(utilities.values(agent), pref)) {
    throw InconsistentUtility("utilities of agent index " + std::to_string(agent.index) +
                              " are not consistent with its preference order");
  }
}

Preference preference_from_utilities(const std::vector<Rational>& by_item) {
  Preference pref(by_item.size());
  for (std::size_t i = 0; i < pref.size(); ++i) pref[i] = ItemId{static_cast<std::uint32_t>(i)};
  std::stable_sort(pref.begin(), pref.end(),
                   [&](ItemId a, ItemId b) { return by_item[a.index] > by_item[b.index]; });
  for (std::size_t k = 0; k + 1 < pref.size(); ++k) {
    if (by_item[pref[k].index] == by_item[pref[k + 1].index]) {
      throw InconsistentUtility("utilities tie; no strict preference is induced");
    }
  }
  return pref;
}

Allocation::Allocation(std::size_t num_agents, std::size_t num_items)
    : bundles_(num_agents), owner_(num_items) {}

void Allocation::record(const Pick& pick) {
  if (owner_.at(pick.item.index)) throw std::logic_error("item allocated twice");
  owner_[pick.item.index] = pick.agent;
  bundles_.at(pick.agent.index).insert(pick.item);
  trace_.push_back(pick);
}

Bundle Allocation::unallocated() const {
  Bundle out;
  for (std::size_t i = 0; i < owner_.size(); ++i) {
    if (!owner_[i]) out.insert(ItemId{static_cast<std::uint32_t>(i)});
  }
  return out;
}

std::vector<std::vector<int>> Allocation::matrix() const {
  std::vector<std::vector<int>> out(bundles_.size(), std::vector<int>(owner_.size(), 0));
  for (std::size_t i = 0; i < owner_.size(); ++i) {
    if (owner_[i]) out[owner_[i]->index][i] = 1;
  }
  return out;
}

}  // namespace seqalloc
