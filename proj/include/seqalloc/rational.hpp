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

#ifndef SEQALLOC_RATIONAL_HPP_
#define SEQALLOC_RATIONAL_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace seqalloc {

// Arbitrary-precision exact rational. All utilities and targets use it.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

class RationalParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Accepts "7", "3.1", ".5", "-2.25" and "31/10". Decimal literals are read
// exactly: "3.1" is 31/10, never the nearest binary float.
Rational parse_rational(std::string_view text);

// Terminating fractions print as decimals ("3.1", "5", "0.125"); anything
// else prints as "p/q". parse_rational(to_exact_string(x)) == x.
std::string to_exact_string(const Rational& value);

}  // namespace seqalloc

#endif  // SEQALLOC_RATIONAL_HPP_
