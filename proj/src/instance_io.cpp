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

#include "seqalloc/instance_io.hpp"

#include <fstream>
#include <optional>
#include <sstream>

namespace seqalloc {

namespace {

std::string join_lines(const std::vector<std::string>& parts) {
  std::string out;
  for (const std::string& p : parts) {
    if (!out.empty()) out += "\n";
    out += p;
  }
  return out;
}

std::vector<std::string> tokenize(std::string_view text) {
  std::vector<std::string> out;
  std::string current;
  for (char c : text) {
    if (c == ',' || c == ' ' || c == '\t' || c == '\r') {
      if (!current.empty()) out.push_back(std::move(current));
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  if (!current.empty()) out.push_back(std::move(current));
  return out;
}

struct UtilLine {
  std::size_t line = 0;
  std::string agent;
  std::vector<std::string> values;
};

}  // namespace

ParseError::ParseError(std::vector<std::string> diagnostics)
    : std::runtime_error(join_lines(diagnostics)), diagnostics_(std::move(diagnostics)) {}

InstanceFile parse_instance_file(std::string_view text) {
  std::vector<std::string> errors;
  std::optional<std::size_t> n, m, length;
  RawInstance raw;
  bool have_seq = false;
  std::vector<UtilLine> util_lines;

  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const std::string where = "line " + std::to_string(lineno) + ": ";
    auto colon = line.find(':');
    std::vector<std::string> head = tokenize(std::string_view(line).substr(0, colon));
    if (head.empty() && colon == std::string::npos) continue;

    if (!n) {
      if (colon != std::string::npos || head.size() != 6 || head[0] != "agents" ||
          head[2] != "items" || head[4] != "seq") {
        errors.push_back(where + "expected header 'agents <n> items <m> seq <L>'");
        throw ParseError(std::move(errors));
      }
      try {
        n = std::stoul(head[1]);
        m = std::stoul(head[3]);
        length = std::stoul(head[5]);
      } catch (const std::exception&) {
        errors.push_back(where + "header counts must be non-negative integers");
        throw ParseError(std::move(errors));
      }
      continue;
    }

    if (colon == std::string::npos) {
      if (head.size() != 1) {
        errors.push_back(where + "item line must contain exactly one name");
      } else {
        raw.items.push_back(head[0]);
      }
      continue;
    }

    std::vector<std::string> body = tokenize(std::string_view(line).substr(colon + 1));
    if (head.size() == 2 && head[0] == "pref") {
      raw.agents.push_back(head[1]);
      raw.preferences.push_back(std::move(body));
    } else if (head.size() == 1 && head[0] == "seq") {
      if (have_seq) errors.push_back(where + "duplicate seq line");
      have_seq = true;
      raw.sequence = std::move(body);
    } else if (head.size() == 2 && head[0] == "util") {
      util_lines.push_back(UtilLine{lineno, head[1], std::move(body)});
    } else {
      errors.push_back(where + "unrecognized directive");
    }
  }

  if (!n) errors.push_back("missing header 'agents <n> items <m> seq <L>'");
  if (n && raw.agents.size() != *n) {
    errors.push_back("header declares " + std::to_string(*n) + " agents, found " +
                     std::to_string(raw.agents.size()) + " pref lines");
  }
  if (m && raw.items.size() != *m) {
    errors.push_back("header declares " + std::to_string(*m) + " items, found " +
                     std::to_string(raw.items.size()) + " item lines");
  }
  if (!have_seq) errors.push_back("missing 'seq :' line");
  if (length && have_seq && raw.sequence.size() != *length) {
    errors.push_back("header declares seq " + std::to_string(*length) + ", found " +
                     std::to_string(raw.sequence.size()) + " entries");
  }
  if (!errors.empty()) throw ParseError(std::move(errors));

  std::optional<Instance> instance;
  try {
    instance = validate_instance(raw);
  } catch (const ValidationError& e) {
    throw ParseError(e.diagnostics());
  }

  UtilityProfile utilities(instance->num_agents(), instance->num_items());
  for (const UtilLine& u : util_lines) {
    const std::string where = "line " + std::to_string(u.line) + ": ";
    auto agent = instance->find_agent(u.agent);
    if (!agent) {
      errors.push_back(where + "util for unknown agent '" + u.agent + "'");
      continue;
    }
    if (utilities.has(*agent)) {
      errors.push_back(where + "duplicate util line for agent '" + u.agent + "'");
      continue;
    }
    std::vector<Rational> ranked;
    try {
      for (const std::string& v : u.values) ranked.push_back(parse_rational(v));
      utilities.set(*agent, utilities_from_ranked_list(*instance, *agent, ranked));
    } catch (const std::exception& e) {
      errors.push_back(where + e.what());
    }
  }
  if (!errors.empty()) throw ParseError(std::move(errors));
  return InstanceFile{std::move(*instance), std::move(utilities)};
}

std::vector<Rational> utilities_from_ranked_list(const Instance& instance, AgentId agent,
                                                 const std::vector<Rational>& ranked) {
  const Preference& pref = instance.preference(agent);
  if (ranked.size() != pref.size()) {
    throw ValidationError({"expected " + std::to_string(pref.size()) + " utilities for agent '" +
                           instance.agent_name(agent) + "', got " +
                           std::to_string(ranked.size())});
  }
  std::vector<Rational> by_item(pref.size());
  for (std::size_t k = 0; k < pref.size(); ++k) by_item[pref[k].index] = ranked[k];
  return by_item;
}

std::string serialize_instance(const Instance& instance, const UtilityProfile* utilities) {
  std::ostringstream out;
  out << "agents " << instance.num_agents() << " items " << instance.num_items() << " seq "
      << instance.sequence_length() << "\n";
  for (ItemId item : instance.items()) out << instance.item_name(item) << "\n";
  for (AgentId agent : instance.agents()) {
    out << "pref " << instance.agent_name(agent) << " : "
        << instance.format_preference(instance.preference(agent)) << "\n";
  }
  out << "seq :";
  for (AgentId agent : instance.sequence()) out << " " << instance.agent_name(agent);
  out << "\n";
  if (utilities != nullptr) {
    for (AgentId agent : instance.agents()) {
      if (!utilities->has(agent)) continue;
      out << "util " << instance.agent_name(agent) << " :";
      for (ItemId item : instance.preference(agent)) {
        out << " " << to_exact_string(utilities->value(agent, item));
      }
      out << "\n";
    }
  }
  return out.str();
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace seqalloc
