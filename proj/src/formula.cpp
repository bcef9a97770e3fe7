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

#include "seqalloc/formula.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <optional>
#include <sstream>

namespace seqalloc {

namespace {

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (const std::string& p : parts) {
    if (!out.empty()) out += "; ";
    out += p;
  }
  return out;
}

std::optional<long> to_long(std::string_view token) {
  long value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) return std::nullopt;
  return value;
}

std::string lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

}  // namespace

std::string literal_stem(Literal literal) {
  return (literal.positive ? "x" : "negx") + std::to_string(literal.variable);
}

FormulaError::FormulaError(std::vector<std::string> diagnostics)
    : std::runtime_error(join(diagnostics)), diagnostics_(std::move(diagnostics)) {}

RestrictedFormula::RestrictedFormula(std::uint32_t num_variables, std::vector<Clause> clauses)
    : num_variables_(num_variables), clauses_(std::move(clauses)) {
  std::vector<std::string> errors;
  if (num_variables_ == 0) errors.push_back("formula has no variables");
  std::map<Literal, int> count;
  for (std::size_t c = 0; c < clauses_.size(); ++c) {
    const Clause& clause = clauses_[c];
    for (std::size_t k = 0; k < clause.size(); ++k) {
      const Literal lit = clause[k];
      if (lit.variable == 0 || lit.variable > num_variables_) {
        errors.push_back("clause " + std::to_string(c + 1) + " references unknown variable " +
                         std::to_string(lit.variable));
        continue;
      }
      if (std::find(clause.begin(), clause.begin() + k, lit) != clause.begin() + k) {
        errors.push_back("clause " + std::to_string(c + 1) + " repeats literal " +
                         std::to_string(lit.dimacs()));
        continue;
      }
      ++count[lit];
    }
  }
  for (std::uint32_t v = 1; v <= num_variables_; ++v) {
    for (bool positive : {true, false}) {
      const Literal lit{v, positive};
      const int seen = count[lit];
      if (seen != 2) {
        errors.push_back("literal " + std::to_string(lit.dimacs()) + " occurs " +
                         std::to_string(seen) + " time(s), expected exactly 2");
      }
    }
  }
  if (!errors.empty()) throw FormulaError(std::move(errors));
}

std::array<std::size_t, 2> RestrictedFormula::occurrences(Literal literal) const {
  std::array<std::size_t, 2> out{};
  std::size_t found = 0;
  for (std::size_t c = 0; c < clauses_.size() && found < 2; ++c) {
    if (std::find(clauses_[c].begin(), clauses_[c].end(), literal) != clauses_[c].end()) {
      out[found++] = c;
    }
  }
  if (found != 2) throw std::out_of_range("literal " + std::to_string(literal.dimacs()) +
                                          " is not part of the formula");
  return out;
}

bool RestrictedFormula::literal_true(Literal literal, const TruthAssignment& assignment) const {
  return assignment.at(literal.variable - 1) == literal.positive;
}

bool RestrictedFormula::satisfies(const TruthAssignment& assignment) const {
  if (assignment.size() != num_variables_) {
    throw FormulaError({"assignment covers " + std::to_string(assignment.size()) + " of " +
                        std::to_string(num_variables_) + " variables"});
  }
  return std::all_of(clauses_.begin(), clauses_.end(), [&](const Clause& clause) {
    return std::any_of(clause.begin(), clause.end(),
                       [&](Literal lit) { return literal_true(lit, assignment); });
  });
}

std::vector<TruthAssignment> RestrictedFormula::satisfying_assignments() const {
  if (num_variables_ > 24) throw FormulaError({"too many variables for enumeration"});
  std::vector<TruthAssignment> out;
  const std::uint64_t total = std::uint64_t{1} << num_variables_;
  for (std::uint64_t bits = 0; bits < total; ++bits) {
    TruthAssignment assignment(num_variables_);
    for (std::uint32_t v = 0; v < num_variables_; ++v) {
      assignment[v] = (bits >> (num_variables_ - 1 - v)) & 1U;
    }
    if (satisfies(assignment)) out.push_back(std::move(assignment));
  }
  return out;
}

std::string RestrictedFormula::to_dimacs() const {
  std::ostringstream out;
  out << "p cnf " << num_variables_ << " " << clauses_.size() << "\n";
  for (const Clause& clause : clauses_) {
    for (Literal lit : clause) out << lit.dimacs() << " ";
    out << "0\n";
  }
  return out.str();
}

RestrictedFormula parse_formula(std::string_view text) {
  std::vector<std::string> errors;
  std::optional<long> declared_vars, declared_clauses;
  std::vector<std::vector<Literal>> raw;
  std::vector<Literal> current;

  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream tokens(line);
    std::string token;
    if (!(tokens >> token)) continue;
    if (token == "c" || token[0] == '%') continue;
    if (token == "p") {
      std::string format, vars, clauses;
      tokens >> format >> vars >> clauses;
      declared_vars = to_long(vars);
      declared_clauses = to_long(clauses);
      if (format != "cnf" || !declared_vars || !declared_clauses || *declared_vars < 0 ||
          *declared_clauses < 0) {
        errors.push_back("line " + std::to_string(lineno) + ": malformed problem line");
        throw FormulaError(std::move(errors));
      }
      continue;
    }
    if (!declared_vars) {
      errors.push_back("line " + std::to_string(lineno) + ": clause before 'p cnf' line");
      throw FormulaError(std::move(errors));
    }
    do {
      auto value = to_long(token);
      if (!value) {
        errors.push_back("line " + std::to_string(lineno) + ": unknown variable token '" +
                         token + "'");
        continue;
      }
      if (*value == 0) {
        raw.push_back(std::move(current));
        current.clear();
        continue;
      }
      const long var = *value < 0 ? -*value : *value;
      if (var > *declared_vars) {
        errors.push_back("line " + std::to_string(lineno) + ": literal " + token +
                         " references unknown variable");
        continue;
      }
      current.push_back(Literal{static_cast<std::uint32_t>(var), *value > 0});
    } while (tokens >> token);
  }

  if (!declared_vars) errors.push_back("missing 'p cnf' line");
  if (!current.empty()) errors.push_back("last clause is not terminated by 0");
  if (declared_clauses && static_cast<long>(raw.size()) != *declared_clauses) {
    errors.push_back("problem line declares " + std::to_string(*declared_clauses) +
                     " clauses, found " + std::to_string(raw.size()));
  }
  std::vector<Clause> clauses;
  for (std::size_t c = 0; c < raw.size(); ++c) {
    if (raw[c].size() != 3) {
      errors.push_back("clause " + std::to_string(c + 1) + " has " +
                       std::to_string(raw[c].size()) + " literals, expected 3");
      continue;
    }
    clauses.push_back(Clause{raw[c][0], raw[c][1], raw[c][2]});
  }
  if (!errors.empty()) {
    // Still report occurrence violations among the well-formed clauses.
    if (declared_vars) {
      try {
        RestrictedFormula(static_cast<std::uint32_t>(*declared_vars), clauses);
      } catch (const FormulaError& e) {
        errors.insert(errors.end(), e.diagnostics().begin(), e.diagnostics().end());
      }
    }
    throw FormulaError(std::move(errors));
  }
  return RestrictedFormula(static_cast<std::uint32_t>(*declared_vars), std::move(clauses));
}

TruthAssignment parse_assignment(std::string_view text, std::uint32_t num_variables) {
  std::vector<std::string> tokens;
  std::string current;
  for (char c : text) {
    if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
      if (!current.empty()) tokens.push_back(std::move(current));
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  if (!current.empty()) tokens.push_back(std::move(current));
  // "TFF" shorthand.
  if (tokens.size() == 1 && tokens[0].size() > 1 &&
      std::all_of(tokens[0].begin(), tokens[0].end(),
                  [](char c) { return c == 'T' || c == 'F' || c == 't' || c == 'f'; })) {
    std::string word = tokens[0];
    tokens.clear();
    for (char c : word) tokens.emplace_back(1, c);
  }

  std::vector<std::optional<bool>> values(num_variables);
  std::vector<std::string> errors;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const std::string t = lower(tokens[i]);
    if (t == "t" || t == "true" || t == "f" || t == "false") {
      if (i < num_variables) {
        values[i] = (t == "t" || t == "true");
      } else {
        errors.push_back("assignment has more than " + std::to_string(num_variables) +
                         " values");
      }
      continue;
    }
    auto lit = to_long(t);
    if (!lit || *lit == 0 || std::abs(*lit) > static_cast<long>(num_variables)) {
      errors.push_back("bad assignment token '" + tokens[i] + "'");
      continue;
    }
    values[std::abs(*lit) - 1] = *lit > 0;
  }
  TruthAssignment out(num_variables);
  for (std::uint32_t v = 0; v < num_variables; ++v) {
    if (!values[v]) {
      errors.push_back("assignment is not total: variable " + std::to_string(v + 1) +
                       " has no value");
    } else {
      out[v] = *values[v];
    }
  }
  if (!errors.empty()) throw FormulaError(std::move(errors));
  return out;
}

std::string format_assignment(const TruthAssignment& assignment) {
  std::string out;
  for (std::size_t v = 0; v < assignment.size(); ++v) {
    if (v) out += ",";
    out += "x" + std::to_string(v + 1) + "=" + (assignment[v] ? "T" : "F");
  }
  return out;
}

}  // namespace seqalloc
