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

// Built-in reference data: the two small hand instances, the four-clause
// reduction example, and its published round tables transcribed verbatim
// (misprints included, each marked with what the construction produces).

#ifndef SEQALLOC_GOLDEN_HPP_
#define SEQALLOC_GOLDEN_HPP_

#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "seqalloc/formula.hpp"
#include "seqalloc/model.hpp"

namespace seqalloc::golden {

// Two agents, o1..o4, sequence 1221.
Instance example1_instance();
// Three agents, a..d, sequence 1231.
Instance counterexample_instance();
// (x1 v x2 v x3)(-x1 v -x2 v -x3)(x1 v -x2 v x3)(-x1 v x2 v -x3)
RestrictedFormula four_clause_formula();
// x1 = T, x2 = F, x3 = F.
TruthAssignment four_clause_assignment();

struct GoldenTable {
  std::string name;
  std::vector<std::string> agents;  // one per stage
  std::vector<std::string> items;   // one per stage
  // 1-based stage -> what the construction actually picks there.
  std::map<std::size_t, std::string> known_misprints;
};

struct StageDiff {
  std::size_t stage;  // 1-based within the table
  std::string field;  // "agent" or "item"
  std::string printed;
  std::string computed;
  bool known_misprint;
};

struct TableDiff {
  std::string table;
  std::vector<StageDiff> diffs;
  // Misprints that no longer diverge (or diverge differently).
  std::vector<std::string> stale_misprints;
  bool ok() const;
};

TableDiff compare_table(const GoldenTable& table, const Instance& instance,
                        std::span<const Pick> picks);

// The eight tables of the worked example, covering all 64 stages in order.
std::vector<GoldenTable> worked_example_tables();

// The four generic choice-round tables with i = 1, in the order: consistent
// true, consistent false, o_x^1 then o_negx^2, o_negx^1 then o_x^2.
std::vector<GoldenTable> generic_choice_tables();

struct CheckResult {
  std::string name;
  bool passed;
  std::vector<std::string> details;
};

using EngineFn = std::function<Allocation(const Instance&)>;

struct GoldenOptions {
  // Replaces run_sequential_allocation wherever the checks replay a report.
  EngineFn engine;
  // Replace the built-in tables (used to exercise the diff reporting).
  std::vector<GoldenTable> worked_tables = worked_example_tables();
  std::vector<GoldenTable> generic_tables = generic_choice_tables();
};

std::vector<CheckResult> run_paper_examples(const GoldenOptions& options = {});

}  // namespace seqalloc::golden

#endif  // SEQALLOC_GOLDEN_HPP_
