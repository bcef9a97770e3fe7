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

#ifndef SEQALLOC_ENGINE_HPP_
#define SEQALLOC_ENGINE_HPP_

#include "seqalloc/model.hpp"

namespace seqalloc {

// At every stage the agent named by the sequence receives its most preferred
// item that is still unallocated. Produces the full pick trace.
Allocation run_sequential_allocation(const Instance& instance);

// Same as above with `agent`'s preference replaced by `report`. Throws
// ValidationError when `report` is not a permutation of the item set.
Allocation run_with_report(const Instance& instance, AgentId agent, const Preference& report);

}  // namespace seqalloc

#endif  // SEQALLOC_ENGINE_HPP_
