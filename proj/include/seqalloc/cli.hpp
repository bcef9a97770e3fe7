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

// Command implementations behind the seqalloc binary. Each returns both a
// JSON document and the human-readable text; main() picks one to print.
//
// Exit codes: 0 success or verdict true, 1 verdict false, 2 usage, parse or
// validation error, 3 search budget exceeded.

#ifndef SEQALLOC_CLI_HPP_
#define SEQALLOC_CLI_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "json.hpp"
#include "seqalloc/oracle.hpp"

namespace seqalloc::cli {

enum ExitCode : int { kOk = 0, kVerdictFalse = 1, kUsage = 2, kBudget = 3 };

struct RunReport {
  int exit_code = kOk;
  // command, args, input_digest, results, exit_code, timing_ms.
  nlohmann::ordered_json document;
  std::string text;
};

// FNV-1a, 64 bit, as 16 hex digits.
std::string digest(std::string_view bytes);

RunReport cmd_allocate(const std::string& instance_path);

struct BestResponseOptions {
  std::string instance_path;
  std::optional<std::string> agent;  // defaults to the first agent
  std::string mode = "two-agent";    // two-agent | oracle | refuted-greedy
  oracle::SearchBudget budget;
  // Values aligned with the agent's preference order; overrides util lines.
  std::optional<std::string> utilities;
};

RunReport cmd_best_response(const BestResponseOptions& options);

RunReport cmd_nash_verify(const std::string& instance_path);

RunReport cmd_reduce(const std::string& formula_path, const std::string& out_prefix);

struct VerifyReductionOptions {
  std::string formula_path;
  std::optional<std::string> assignment;
  bool patterns = false;
  std::uint32_t max_variables = 8;
};

RunReport cmd_verify_reduction(const VerifyReductionOptions& options);

RunReport cmd_paper_examples();

}  // namespace seqalloc::cli

#endif  // SEQALLOC_CLI_HPP_
