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

#include "seqalloc/cli.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>

#include "seqalloc/engine.hpp"
#include "seqalloc/formula.hpp"
#include "seqalloc/golden.hpp"
#include "seqalloc/instance_io.hpp"
#include "seqalloc/reduction.hpp"
#include "seqalloc/two_agent.hpp"

namespace seqalloc::cli {

namespace {

using nlohmann::ordered_json;

struct Outcome {
  int exit_code = kOk;
  ordered_json results = ordered_json::object();
  std::ostringstream text;
};

std::vector<std::string> names(const Instance& inst, const Bundle& bundle) {
  std::vector<std::string> out;
  for (ItemId id : bundle) out.push_back(inst.item_name(id));
  return out;
}

std::vector<std::string> names(const Instance& inst, const Preference& pref) {
  std::vector<std::string> out;
  for (ItemId id : pref) out.push_back(inst.item_name(id));
  return out;
}

ordered_json trace_json(const Instance& inst, std::span<const Pick> picks) {
  ordered_json out = ordered_json::array();
  for (const Pick& p : picks) {
    out.push_back({{"stage", p.stage + 1},
                   {"agent", inst.agent_name(p.agent)},
                   {"item", inst.item_name(p.item)}});
  }
  return out;
}

void print_trace(std::ostream& os, const Instance& inst, std::span<const Pick> picks) {
  for (const Pick& p : picks) {
    os << "  " << p.stage + 1 << "\t" << inst.agent_name(p.agent) << "\t"
       << inst.item_name(p.item) << "\n";
  }
}

void fail(Outcome& outcome, int code, const std::string& kind,
          const std::vector<std::string>& diagnostics) {
  outcome.exit_code = code;
  outcome.results = ordered_json::object();
  outcome.results["error"] = kind;
  outcome.results["diagnostics"] = diagnostics;
  outcome.text.str("");
  outcome.text << kind << ":\n";
  for (const std::string& d : diagnostics) outcome.text << "  " << d << "\n";
}

// Runs a command body, mapping library exceptions onto exit codes.
RunReport run(const std::string& command, ordered_json args, const std::string& input,
              const std::function<void(Outcome&)>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome outcome;
  try {
    body(outcome);
  } catch (const oracle::BudgetExceeded& e) {
    fail(outcome, kBudget, "budget exceeded", {e.what()});
  } catch (const ParseError& e) {
    fail(outcome, kUsage, "parse error", e.diagnostics());
  } catch (const FormulaError& e) {
    fail(outcome, kUsage, "formula error", e.diagnostics());
  } catch (const two_agent::UnsupportedInstance& e) {
    fail(outcome, kUsage, "mode/instance mismatch", {e.what()});
  } catch (const two_agent::MissingUtilities& e) {
    fail(outcome, kUsage, "missing utilities", {e.what()});
  } catch (const ValidationError& e) {
    fail(outcome, kUsage, "invalid input", e.diagnostics());
  } catch (const std::exception& e) {
    fail(outcome, kUsage, "error", {e.what()});
  }
  const auto elapsed = std::chrono::steady_clock::now() - start;

  RunReport report;
  report.exit_code = outcome.exit_code;
  report.document["command"] = command;
  report.document["args"] = std::move(args);
  report.document["input_digest"] = digest(input);
  report.document["results"] = std::move(outcome.results);
  report.document["exit_code"] = outcome.exit_code;
  report.document["timing_ms"] =
      std::chrono::duration<double, std::milli>(elapsed).count();
  report.text = outcome.text.str();
  return report;
}

// Reads a file for the digest; errors surface again inside the body.
std::string slurp_or_empty(const std::string& path) {
  try {
    return read_text_file(path);
  } catch (const std::exception&) {
    return {};
  }
}

std::vector<Rational> parse_value_list(const std::string& text) {
  std::vector<Rational> values;
  std::string token;
  std::istringstream in(text);
  while (in >> token) {
    std::size_t start = 0;
    while (start <= token.size()) {
      const std::size_t comma = token.find(',', start);
      const std::string part = token.substr(start, comma - start);
      if (!part.empty()) values.push_back(parse_rational(part));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
  }
  return values;
}

AgentId pick_agent(const Instance& inst, const std::optional<std::string>& name) {
  if (!name) return AgentId{0};
  if (auto id = inst.find_agent(*name)) return *id;
  throw ValidationError({"unknown agent '" + *name + "'"});
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << contents;
  if (!out) throw std::runtime_error("write failed for " + path);
}

}  // namespace

std::string digest(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

RunReport cmd_allocate(const std::string& instance_path) {
  const std::string input = slurp_or_empty(instance_path);
  return run("allocate", {{"instance", instance_path}}, input, [&](Outcome& o) {
    const InstanceFile file = parse_instance_file(read_text_file(instance_path));
    const Instance& inst = file.instance;
    const Allocation a = run_sequential_allocation(inst);

    ordered_json bundles = ordered_json::array();
    for (AgentId agent : inst.agents()) {
      ordered_json b{{"agent", inst.agent_name(agent)}, {"items", names(inst, a.bundle(agent))}};
      o.text << "agent " << inst.agent_name(agent) << ": " << inst.format_bundle(a.bundle(agent));
      if (file.utilities.has(agent)) {
        const std::string u = to_exact_string(bundle_utility(file.utilities, agent, a.bundle(agent)));
        b["utility"] = u;
        o.text << "  utility " << u;
      }
      o.text << "\n";
      bundles.push_back(std::move(b));
    }
    o.results["bundles"] = std::move(bundles);
    o.results["trace"] = trace_json(inst, a.trace());
    o.results["unallocated"] = names(inst, a.unallocated());
    o.text << "trace:\n";
    print_trace(o.text, inst, a.trace());
    if (!a.unallocated().empty()) o.text << "unallocated: " << inst.format_bundle(a.unallocated()) << "\n";
  });
}

RunReport cmd_best_response(const BestResponseOptions& options) {
  ordered_json args{{"instance", options.instance_path},
                    {"agent", options.agent ? ordered_json(*options.agent) : ordered_json(nullptr)},
                    {"mode", options.mode},
                    {"budget", {{"max_turns", options.budget.max_turns},
                                {"max_nodes", options.budget.max_nodes}}},
                    {"utilities", options.utilities ? ordered_json(*options.utilities)
                                                    : ordered_json(nullptr)}};
  const std::string input = slurp_or_empty(options.instance_path);
  return run("best-response", std::move(args), input, [&](Outcome& o) {
    if (options.mode != "two-agent" && options.mode != "oracle" && options.mode != "refuted-greedy") {
      throw std::invalid_argument("unknown mode '" + options.mode +
                                  "' (expected two-agent, oracle or refuted-greedy)");
    }
    InstanceFile file = parse_instance_file(read_text_file(options.instance_path));
    const Instance& inst = file.instance;
    const AgentId agent = pick_agent(inst, options.agent);
    std::string utility_source = "file";
    if (options.utilities) {
      file.utilities.set(agent, utilities_from_ranked_list(inst, agent, parse_value_list(*options.utilities)));
      utility_source = "flag";
    } else if (!file.utilities.has(agent)) {
      file.utilities.set(agent, make_lexicographic_utilities(inst.preference(agent)));
      utility_source = "lexicographic";
    }
    const UtilityProfile& u = file.utilities;
    require_consistent(u, agent, inst.preference(agent));

    const Bundle truthful = run_sequential_allocation(inst).bundle(agent);
    o.results["agent"] = inst.agent_name(agent);
    o.results["mode"] = options.mode;
    o.results["utility_source"] = utility_source;
    o.results["truthful_bundle"] = names(inst, truthful);
    o.results["truthful_utility"] = to_exact_string(bundle_utility(u, agent, truthful));
    o.text << "agent " << inst.agent_name(agent) << " (" << options.mode << ", utilities from "
           << utility_source << ")\n";
    o.text << "truthful: " << inst.format_bundle(truthful) << "  utility "
           << to_exact_string(bundle_utility(u, agent, truthful)) << "\n";

    if (options.mode == "two-agent") {
      const two_agent::BestResponse br = two_agent::best_response(inst, u, agent);
      o.results["report"] = names(inst, br.report);
      o.results["bundle"] = names(inst, br.bundle);
      o.results["utility"] = to_exact_string(br.utility);
      o.text << "best response: " << inst.format_bundle(br.bundle) << "  utility "
             << to_exact_string(br.utility) << "\n";
      o.text << "report: " << inst.format_preference(br.report) << "\n";
    } else if (options.mode == "oracle") {
      const oracle::OracleResult r = oracle::brute_force_best_response(inst, u, agent, options.budget);
      o.results["max_utility"] = to_exact_string(r.max_utility);
      ordered_json optima = ordered_json::array();
      o.text << "max utility: " << to_exact_string(r.max_utility) << "\n";
      for (const auto& opt : r.optima) {
        optima.push_back({{"bundle", names(inst, opt.bundle)}, {"witness", names(inst, opt.witness)}});
        o.text << "optimal: " << inst.format_bundle(opt.bundle)
               << "  witness: " << inst.format_preference(opt.witness) << "\n";
      }
      o.results["optima"] = std::move(optima);
      o.results["bundle"] = names(inst, r.optima.front().bundle);
      o.results["report"] = names(inst, r.optima.front().witness);
      o.results["utility"] = to_exact_string(r.max_utility);
    } else {
      const Bundle greedy = oracle::refuted_greedy_best_response(inst, agent, options.budget);
      const Rational value = bundle_utility(u, agent, greedy);
      o.results["bundle"] = names(inst, greedy);
      o.results["utility"] = to_exact_string(value);
      o.text << "greedy bundle: " << inst.format_bundle(greedy) << "  utility "
             << to_exact_string(value) << "\n";
    }
  });
}

RunReport cmd_nash_verify(const std::string& instance_path) {
  const std::string input = slurp_or_empty(instance_path);
  return run("nash-verify", {{"instance", instance_path}}, input, [&](Outcome& o) {
    const InstanceFile file = parse_instance_file(read_text_file(instance_path));
    const Instance& inst = file.instance;
    const two_agent::NashVerdict verdict = two_agent::verify_nash_two_agents(inst, file.utilities);
    o.results["equilibrium"] = verdict.equilibrium;
    ordered_json agents = ordered_json::array();
    o.text << "equilibrium: " << yes_no(verdict.equilibrium) << "\n";
    for (const auto& e : verdict.agents) {
      agents.push_back({{"agent", inst.agent_name(e.agent)},
                        {"current_bundle", names(inst, e.current_bundle)},
                        {"current_utility", to_exact_string(e.current_utility)},
                        {"best_response_bundle", names(inst, e.deviation.bundle)},
                        {"best_response_utility", to_exact_string(e.deviation.utility)},
                        {"best_response_report", names(inst, e.deviation.report)},
                        {"improves", e.improves}});
      o.text << "agent " << inst.agent_name(e.agent) << ": current "
             << inst.format_bundle(e.current_bundle) << " (" << to_exact_string(e.current_utility)
             << "), best response " << inst.format_bundle(e.deviation.bundle) << " ("
             << to_exact_string(e.deviation.utility) << ")";
      if (e.improves) o.text << "  deviation: " << inst.format_preference(e.deviation.report);
      o.text << "\n";
    }
    o.results["agents"] = std::move(agents);
    o.exit_code = verdict.equilibrium ? kOk : kVerdictFalse;
  });
}

RunReport cmd_reduce(const std::string& formula_path, const std::string& out_prefix) {
  const std::string input = slurp_or_empty(formula_path);
  return run("reduce", {{"formula", formula_path}, {"out", out_prefix}}, input, [&](Outcome& o) {
    const RestrictedFormula formula = parse_formula(read_text_file(formula_path));
    const reduction::ReductionOutput out = reduction::build_instance(formula);
    const std::string inst_path = out_prefix + ".inst";
    const std::string registry_path = out_prefix + ".registry.json";
    write_file(inst_path, serialize_instance(out.instance, &out.utilities));
    write_file(registry_path, reduction::registry_json(out));

    o.results["agents"] = out.instance.num_agents();
    o.results["items"] = out.instance.num_items();
    o.results["stages"] = out.instance.sequence_length();
    o.results["target"] = to_exact_string(out.target);
    o.results["files"] = {inst_path, registry_path};
    o.text << out.instance.num_agents() << " agents, " << out.instance.num_items() << " items, "
           << out.instance.sequence_length() << " stages\n";
    o.text << "target: " << to_exact_string(out.target) << "\n";
    o.text << "wrote " << inst_path << " and " << registry_path << "\n";

    bool all = true;
    ordered_json ledger = ordered_json::array();
    for (const auto& check : reduction::audit_utilities(out)) {
      all &= check.passed;
      ledger.push_back({{"check", check.name}, {"passed", check.passed}, {"detail", check.detail}});
      if (!check.passed) o.text << "ledger check failed: " << check.name << " " << check.detail << "\n";
    }
    o.results["ledger"] = std::move(ledger);
    o.results["ledger_ok"] = all;
    o.text << "utility ledger: " << (all ? "all checks pass" : "FAILED") << "\n";
    o.exit_code = all ? kOk : kVerdictFalse;
  });
}

RunReport cmd_verify_reduction(const VerifyReductionOptions& options) {
  ordered_json args{{"formula", options.formula_path},
                    {"assignment", options.assignment ? ordered_json(*options.assignment)
                                                      : ordered_json(nullptr)},
                    {"patterns", options.patterns}};
  const std::string input = slurp_or_empty(options.formula_path);
  return run("verify-reduction", std::move(args), input, [&](Outcome& o) {
    if (options.assignment.has_value() == options.patterns) {
      throw std::invalid_argument("give exactly one of --assignment or --patterns");
    }
    const RestrictedFormula formula = parse_formula(read_text_file(options.formula_path));
    const reduction::ReductionOutput out = reduction::build_instance(formula);
    const AgentId one = out.manipulator();
    o.results["target"] = to_exact_string(out.target);
    o.text << "target: " << to_exact_string(out.target) << "\n";

    if (options.assignment) {
      const TruthAssignment t = parse_assignment(*options.assignment, formula.num_variables());
      const reduction::ForwardResult r = reduction::verify_forward(out, t);
      o.results["assignment"] = format_assignment(t);
      o.results["satisfies_formula"] = r.satisfies_formula;
      o.results["utility"] = to_exact_string(r.utility);
      o.results["meets_target"] = r.meets_target;
      o.results["holds_all_clause_items"] = r.holds_all_clause_items;
      o.results["bundle"] = names(out.instance, r.allocation.bundle(one));
      o.results["trace"] = trace_json(out.instance, r.allocation.trace());
      o.text << "assignment " << format_assignment(t) << " satisfies formula: "
             << yes_no(r.satisfies_formula) << "\n";
      o.text << "utility: " << to_exact_string(r.utility) << "\n";
      o.text << "meets target: " << yes_no(r.meets_target) << "\n";
      o.text << "holds every o_c^1: " << yes_no(r.holds_all_clause_items) << "\n";

      // The published example also gets a stage-by-stage table comparison.
      if (formula.clauses() == golden::four_clause_formula().clauses() &&
          t == golden::four_clause_assignment()) {
        ordered_json tables = ordered_json::array();
        const auto printed = golden::worked_example_tables();
        const std::span<const Pick> trace(r.allocation.trace());
        for (std::size_t i = 0; i < printed.size(); ++i) {
          const auto& round = out.rounds[i];
          const golden::TableDiff diff =
              golden::compare_table(printed[i], out.instance, trace.subspan(round.begin, round.end - round.begin));
          ordered_json diffs = ordered_json::array();
          for (const auto& d : diff.diffs) {
            diffs.push_back({{"stage", d.stage}, {"field", d.field}, {"printed", d.printed},
                             {"computed", d.computed}, {"known_misprint", d.known_misprint}});
            o.text << diff.table << ", stage " << d.stage << ": printed " << d.printed
                   << ", computed " << d.computed
                   << (d.known_misprint ? " (known misprint)" : " (MISMATCH)") << "\n";
          }
          tables.push_back({{"table", diff.table}, {"ok", diff.ok()}, {"diffs", std::move(diffs)}});
        }
        o.results["tables"] = std::move(tables);
      }
      o.exit_code = r.meets_target ? kOk : kVerdictFalse;
      return;
    }

    const reduction::PatternReport report = reduction::verify_choice_patterns(out, options.max_variables);
    ordered_json outcomes = ordered_json::array();
    for (const auto& oc : report.outcomes) {
      std::vector<std::string> pats;
      for (auto p : oc.patterns) pats.push_back(reduction::pattern_name(p));
      outcomes.push_back({{"patterns", pats},
                          {"consistent", oc.consistent},
                          {"satisfies_formula", oc.satisfies_formula},
                          {"utility", to_exact_string(oc.utility)},
                          {"meets_target", oc.meets_target}});
      if (oc.meets_target) {
        o.text << "meets target: " << format_assignment(*oc.assignment) << "\n";
      }
    }
    o.results["outcomes"] = std::move(outcomes);
    o.results["inconsistent_rounds_ok"] = report.inconsistent_rounds_ok;
    o.results["target_iff_satisfying"] = report.target_iff_satisfying;
    o.results["satisfiable_by_patterns"] = report.satisfiable_by_patterns;
    o.results["satisfiable_by_enumeration"] = report.satisfiable_by_enumeration;
    o.results["agree"] = report.ok();
    o.text << report.outcomes.size() << " patterns replayed\n";
    o.text << "inconsistent rounds give {h_x^2, h_negx^2}: " << yes_no(report.inconsistent_rounds_ok) << "\n";
    o.text << "target reached exactly for satisfying consistent patterns: "
           << yes_no(report.target_iff_satisfying) << "\n";
    o.text << "satisfiable (patterns): " << yes_no(report.satisfiable_by_patterns)
           << ", satisfiable (enumeration): " << yes_no(report.satisfiable_by_enumeration) << "\n";
    o.exit_code = report.ok() ? kOk : kVerdictFalse;
  });
}

RunReport cmd_paper_examples() {
  return run("paper-examples", ordered_json::object(), "", [&](Outcome& o) {
    bool all = true;
    ordered_json checks = ordered_json::array();
    for (const auto& c : golden::run_paper_examples()) {
      all &= c.passed;
      checks.push_back({{"check", c.name}, {"passed", c.passed}, {"details", c.details}});
      o.text << (c.passed ? "PASS  " : "FAIL  ") << c.name << "\n";
      for (const std::string& d : c.details) o.text << "      " << d << "\n";
    }
    o.results["checks"] = std::move(checks);
    o.results["all_passed"] = all;
    o.exit_code = all ? kOk : kVerdictFalse;
  });
}

}  // namespace seqalloc::cli
