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

#include <iostream>

#include "CLI11.hpp"
#include "seqalloc/cli.hpp"

int main(int argc, char** argv) {
  using namespace seqalloc::cli;

  CLI::App app{"Sequential allocation: allocation, best responses and the 3SAT reduction"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "Print the JSON run report instead of text");

  std::string instance_path, formula_path, out_prefix = "reduction";

  auto* allocate = app.add_subcommand("allocate", "Run sequential allocation");
  allocate->add_option("instance", instance_path, "Instance file")->required();

  BestResponseOptions br;
  std::uint64_t budget = br.budget.max_nodes;
  auto* best = app.add_subcommand("best-response", "Compute a best response for one agent");
  best->add_option("instance", br.instance_path, "Instance file")->required();
  best->add_option("--agent", br.agent, "Responding agent (default: first agent)");
  best->add_option("--mode", br.mode, "two-agent | oracle | refuted-greedy")
      ->check(CLI::IsMember({"two-agent", "oracle", "refuted-greedy"}));
  best->add_option("--budget", budget, "Oracle node budget");
  best->add_option("--max-turns", br.budget.max_turns, "Oracle limit on the agent's turns");
  best->add_option("--utilities", br.utilities,
                   "Utilities aligned with the agent's preference order, e.g. 3.1,3,2,1");

  auto* nash = app.add_subcommand("nash-verify", "Check whether reports form a Nash equilibrium (two agents)");
  nash->add_option("instance", instance_path, "Instance file with util lines for both agents")->required();

  auto* reduce = app.add_subcommand("reduce", "Compile a restricted 3-CNF formula into an instance");
  reduce->add_option("formula", formula_path, "DIMACS file")->required();
  reduce->add_option("--out", out_prefix, "Output prefix for .inst and .registry.json");

  VerifyReductionOptions vr;
  auto* verify = app.add_subcommand("verify-reduction", "Replay assignments or choice patterns");
  verify->add_option("formula", vr.formula_path, "DIMACS file")->required();
  auto* assignment = verify->add_option("--assignment", vr.assignment, "e.g. T,F,F");
  auto* patterns = verify->add_flag("--patterns", vr.patterns, "Enumerate all 4^|X| choice patterns");
  assignment->excludes(patterns);
  verify->add_option("--budget", vr.max_variables, "Largest variable count for --patterns");

  app.add_subcommand("paper-examples", "Run the built-in reference checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  RunReport report;
  if (allocate->parsed()) {
    report = cmd_allocate(instance_path);
  } else if (best->parsed()) {
    br.budget.max_nodes = budget;
    report = cmd_best_response(br);
  } else if (nash->parsed()) {
    report = cmd_nash_verify(instance_path);
  } else if (reduce->parsed()) {
    report = cmd_reduce(formula_path, out_prefix);
  } else if (verify->parsed()) {
    report = cmd_verify_reduction(vr);
  } else {
    report = cmd_paper_examples();
  }

  if (json) {
    std::cout << report.document.dump(2) << "\n";
  } else if (report.exit_code == kUsage || report.exit_code == kBudget) {
    std::cerr << report.text;
  } else {
    std::cout << report.text;
  }
  return report.exit_code;
}
