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

// Plain-text instance format.
//
//   # comment (anything after '#' is ignored; blank lines are ignored)
//   agents <n> items <m> seq <L>
//   <item name>                       m lines, one item each, in id order
//   pref <agent> : <item> <item> ...  n lines, most preferred first; the
//                                     order of these lines fixes agent ids
//   seq : <agent> <agent> ...         exactly L entries
//   util <agent> : <v> <v> ...        optional; values aligned with that
//                                     agent's pref line, decimal or p/q
//
// List entries may be separated by whitespace or commas. Names may not
// contain whitespace, ',', ':' or '#'. Only the header has to come first;
// the remaining lines may appear in any order.

#ifndef SEQALLOC_INSTANCE_IO_HPP_
#define SEQALLOC_INSTANCE_IO_HPP_

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "seqalloc/model.hpp"

namespace seqalloc {

class ParseError : public std::runtime_error {
 public:
  explicit ParseError(std::vector<std::string> diagnostics);
  const std::vector<std::string>& diagnostics() const { return diagnostics_; }

 private:
  std::vector<std::string> diagnostics_;
};

struct InstanceFile {
  Instance instance;
  // Agents without a util line have no utilities.
  UtilityProfile utilities;
};

// Throws ParseError; syntax problems carry "line N: " prefixes, and
// validation failures of the assembled instance are appended after them.
InstanceFile parse_instance_file(std::string_view text);

// Inverse of parse_instance_file. Utilities are written for every agent that
// has them, in exact form.
std::string serialize_instance(const Instance& instance, const UtilityProfile* utilities = nullptr);

// Utility list aligned with `agent`'s preference order, as used by util lines
// and the --utilities flag. Returns values indexed by item.
std::vector<Rational> utilities_from_ranked_list(const Instance& instance, AgentId agent,
                                                 const std::vector<Rational>& ranked);

std::string read_text_file(const std::string& path);

}  // namespace seqalloc

#endif  // SEQALLOC_INSTANCE_IO_HPP_
