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

#include "seqalloc/rational.hpp"

#include <algorithm>
#include <cctype>

namespace seqalloc {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

BigInt parse_integer(std::string_view digits) {
  BigInt value = 0;
  for (char c : digits) value = value * 10 + (c - '0');
  return value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string original(text);
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }

  Rational value;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    std::string_view num = text.substr(0, slash);
    std::string_view den = text.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) {
      throw RationalParseError("malformed rational '" + original + "'");
    }
    BigInt d = parse_integer(den);
    if (d == 0) throw RationalParseError("zero denominator in '" + original + "'");
    value = Rational(parse_integer(num), d);
  } else {
    std::string_view whole = text;
    std::string_view frac;
    if (auto dot = text.find('.'); dot != std::string_view::npos) {
      whole = text.substr(0, dot);
      frac = text.substr(dot + 1);
      if (!frac.empty() && !all_digits(frac)) {
        throw RationalParseError("malformed decimal '" + original + "'");
      }
    }
    if (whole.empty() && frac.empty()) {
      throw RationalParseError("malformed decimal '" + original + "'");
    }
    if (!whole.empty() && !all_digits(whole)) {
      throw RationalParseError("malformed decimal '" + original + "'");
    }
    BigInt scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    BigInt numerator = (whole.empty() ? BigInt(0) : parse_integer(whole)) * scale +
                       (frac.empty() ? BigInt(0) : parse_integer(frac));
    value = Rational(numerator, scale);
  }
  return negative ? Rational(-value) : value;
}

std::string to_exact_string(const Rational& value) {
  BigInt num = boost::multiprecision::numerator(value);
  BigInt den = boost::multiprecision::denominator(value);

  // den = 2^a 5^b  <=>  the decimal expansion terminates after max(a, b) digits.
  BigInt rest = den;
  int twos = 0;
  int fives = 0;
  while (rest % 2 == 0) { rest /= 2; ++twos; }
  while (rest % 5 == 0) { rest /= 5; ++fives; }
  if (rest != 1) return num.str() + "/" + den.str();

  const int digits = std::max(twos, fives);
  BigInt scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  const bool negative = num < 0;
  BigInt scaled = (negative ? BigInt(-num) : num) * (scale / den);

  std::string out = BigInt(scaled / scale).str();
  if (digits > 0) {
    std::string frac = BigInt(scaled % scale).str();
    frac.insert(0, static_cast<std::size_t>(digits) - frac.size(), '0');
    out += "." + frac;
  }
  return negative ? "-" + out : out;
}

}  // namespace seqalloc
