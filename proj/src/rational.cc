// Copyright 2026 The Persuade Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "persuade/rational.hpp"

#include <cctype>

#include "persuade/error.hpp"

namespace persuade {
namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

// GMP reads a leading zero as an octal prefix, so strip leading zeros first.
Integer decimal(std::string_view digits) {
  const auto first = digits.find_first_not_of('0');
  if (first == std::string_view::npos) return Integer(0);
  return Integer{std::string(digits.substr(first))};
}

Integer parse_integer(std::string_view s, std::string_view whole) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) {
    throw ValidationError("not a rational: '" + std::string(whole) + "'");
  }
  Integer v = decimal(s);
  return negative ? Integer(-v) : v;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
    text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
    text.remove_suffix(1);
  const std::string_view whole = text;

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    Integer num = parse_integer(text.substr(0, slash), whole);
    std::string_view den_text = text.substr(slash + 1);
    if (!all_digits(den_text)) {
      throw ValidationError("not a rational: '" + std::string(whole) + "'");
    }
    Integer den = decimal(den_text);
    if (den == 0) {
      throw ValidationError("zero denominator: '" + std::string(whole) + "'");
    }
    return Rational(num, den);
  }

  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = text.substr(0, dot);
    std::string_view frac_part = text.substr(dot + 1);
    bool negative = !int_part.empty() && int_part.front() == '-';
    if (!int_part.empty() && (int_part.front() == '-' || int_part.front() == '+'))
      int_part.remove_prefix(1);
    if ((int_part.empty() && frac_part.empty()) ||
        (!int_part.empty() && !all_digits(int_part)) ||
        (!frac_part.empty() && !all_digits(frac_part))) {
      throw ValidationError("not a rational: '" + std::string(whole) + "'");
    }
    Integer scale = boost::multiprecision::pow(Integer(10),
                                               static_cast<unsigned>(frac_part.size()));
    Integer digits = decimal(std::string(int_part) + std::string(frac_part));
    Rational r(digits, scale);
    return negative ? Rational(-r) : r;
  }

  return Rational(parse_integer(text, whole));
}

std::string to_string(const Rational& value) {
  const Integer num = boost::multiprecision::numerator(value);
  const Integer den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

std::string to_decimal(const Rational& value, int places) {
  Integer scale = boost::multiprecision::pow(Integer(10), static_cast<unsigned>(places));
  Rational scaled = abs(value) * scale;
  Integer num = boost::multiprecision::numerator(scaled);
  Integer den = boost::multiprecision::denominator(scaled);
  Integer q = num / den;
  Integer r = num % den;
  if (2 * r >= den) ++q;
  std::string digits = q.str();
  if (places > 0) {
    if (static_cast<int>(digits.size()) <= places) {
      digits.insert(0, static_cast<std::size_t>(places) + 1 - digits.size(), '0');
    }
    digits.insert(digits.size() - static_cast<std::size_t>(places), ".");
  }
  if (value < 0 && q != 0) digits.insert(0, "-");
  return digits;
}

double to_double(const Rational& value) { return value.convert_to<double>(); }

Integer common_denominator(std::span<const Rational> values) {
  Integer lcm_value = 1;
  for (const Rational& v : values) {
    lcm_value = boost::multiprecision::lcm(lcm_value,
                                           Integer(boost::multiprecision::denominator(v)));
  }
  return lcm_value;
}

bool is_row_stochastic(const RationalMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Rational total = 0;
    for (const Rational& p : m.row(i)) {
      if (p < 0) return false;
      total += p;
    }
    if (total != 1) return false;
  }
  return true;
}

int degenerate_index(std::span<const Rational> row) {
  for (std::size_t j = 0; j < row.size(); ++j) {
    if (row[j] == 1) return static_cast<int>(j);
  }
  return -1;
}

}  // namespace persuade
