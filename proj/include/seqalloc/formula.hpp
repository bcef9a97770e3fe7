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

// 3-CNF formulas in which every literal occurs in exactly two clauses, read
// from DIMACS:
//
//   c comment
//   p cnf <variables> <clauses>
//   1 2 3 0
//   -1 -2 -3 0
//
// Clauses may span lines; each ends with 0.

#ifndef SEQALLOC_FORMULA_HPP_
#define SEQALLOC_FORMULA_HPP_

#include <array>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace seqalloc {

struct Literal {
  std::uint32_t variable = 1;  // 1-based
  bool positive = true;

  Literal negated() const { return Literal{variable, !positive}; }
  int dimacs() const { return positive ? static_cast<int>(variable) : -static_cast<int>(variable); }
  auto operator<=>(const Literal&) const = default;
};

// "x3" or "negx3"; the same stems appear in gadget names.
std::string literal_stem(Literal literal);

using Clause = std::array<Literal, 3>;

// variable v is assignment[v - 1].
using TruthAssignment = std::vector<bool>;

class FormulaError : public std::runtime_error {
 public:
  explicit FormulaError(std::vector<std::string> diagnostics);
  const std::vector<std::string>& diagnostics() const { return diagnostics_; }

 private:
  std::vector<std::string> diagnostics_;
};

class RestrictedFormula {
 public:
  // Throws FormulaError naming every violated restriction.
  RestrictedFormula(std::uint32_t num_variables, std::vector<Clause> clauses);

  std::uint32_t num_variables() const { return num_variables_; }
  const std::vector<Clause>& clauses() const { return clauses_; }

  // Indices of the two clauses containing `literal`, in clause order.
  std::array<std::size_t, 2> occurrences(Literal literal) const;

  bool literal_true(Literal literal, const TruthAssignment& assignment) const;
  bool satisfies(const TruthAssignment& assignment) const;

  // All satisfying assignments in binary-counter order (variable 1 is the
  // most significant bit, false before true). Refuses more than 24 variables.
  std::vector<TruthAssignment> satisfying_assignments() const;

  std::string to_dimacs() const;

 private:
  std::uint32_t num_variables_;
  std::vector<Clause> clauses_;
};

RestrictedFormula parse_formula(std::string_view text);

// "T,F,F" / "TFF" / "1,-2,-3" / "true,false,false". Throws FormulaError when
// the assignment is not total over the formula's variables.
TruthAssignment parse_assignment(std::string_view text, std::uint32_t num_variables);
std::string format_assignment(const TruthAssignment& assignment);

}  // namespace seqalloc

#endif  // SEQALLOC_FORMULA_HPP_
