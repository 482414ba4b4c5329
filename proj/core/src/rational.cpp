// Copyright 2026 The Baccarat Equilibrium Authors
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

#include "baccarat/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace baccarat {
namespace {

Integer pow10(int exponent) {
  Integer result = 1;
  for (int i = 0; i < exponent; ++i) result *= 10;
  return result;
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

[[noreturn]] void bad(std::string_view text) {
  throw std::invalid_argument("not a rational number: '" + std::string(text) +
                              "'");
}

Rational parse_decimal(std::string_view text, std::string_view original) {
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  int exponent = 0;
  if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
    std::string_view exp_part = text.substr(e + 1);
    text = text.substr(0, e);
    bool exp_negative = false;
    if (!exp_part.empty() && (exp_part.front() == '-' || exp_part.front() == '+')) {
      exp_negative = exp_part.front() == '-';
      exp_part.remove_prefix(1);
    }
    if (!all_digits(exp_part) || exp_part.size() > 4) bad(original);
    exponent = std::stoi(std::string(exp_part));
    if (exp_negative) exponent = -exponent;
  }
  std::string digits;
  int fraction_digits = 0;
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view whole = text.substr(0, dot);
    std::string_view frac = text.substr(dot + 1);
    if (whole.empty() && frac.empty()) bad(original);
    if ((!whole.empty() && !all_digits(whole)) ||
        (!frac.empty() && !all_digits(frac))) {
      bad(original);
    }
    digits = std::string(whole) + std::string(frac);
    fraction_digits = static_cast<int>(frac.size());
  } else {
    if (!all_digits(text)) bad(original);
    digits = std::string(text);
  }
  Rational value{Integer(digits)};
  int scale = exponent - fraction_digits;
  if (scale > 0) {
    value *= Rational(pow10(scale));
  } else if (scale < 0) {
    value /= Rational(pow10(-scale));
  }
  return negative ? Rational(-value) : value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view original = text;
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
    text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
    text.remove_suffix(1);
  if (text.empty()) bad(original);

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    std::string_view num = text.substr(0, slash);
    std::string_view den = text.substr(slash + 1);
    bool negative = false;
    if (!num.empty() && (num.front() == '-' || num.front() == '+')) {
      negative = num.front() == '-';
      num.remove_prefix(1);
    }
    if (!all_digits(num) || !all_digits(den)) bad(original);
    Integer d(std::string{den});
    if (d == 0) throw std::invalid_argument("zero denominator in '" +
                                            std::string(original) + "'");
    Rational value(Integer(std::string{num}), d);
    return negative ? Rational(-value) : value;
  }
  return parse_decimal(text, original);
}

std::string to_fraction_string(const Rational& value) {
  const Integer num = numerator(value);
  const Integer den = denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

std::string to_decimal_string(const Rational& value, int places) {
  if (places < 0) throw std::invalid_argument("negative decimal places");
  const bool negative = value < 0;
  const Rational magnitude = negative ? Rational(-value) : value;
  const Integer scale = pow10(places);
  const Integer num = numerator(magnitude) * scale;
  const Integer den = denominator(magnitude);
  Integer q = num / den;
  const Integer r = num % den;
  if (2 * r >= den) q += 1;

  std::string digits = q.str();
  if (static_cast<int>(digits.size()) <= places) {
    digits.insert(0, static_cast<std::size_t>(places) + 1 - digits.size(), '0');
  }
  std::string out;
  if (negative && q != 0) out.push_back('-');
  out += digits.substr(0, digits.size() - static_cast<std::size_t>(places));
  if (places > 0) {
    out.push_back('.');
    out += digits.substr(digits.size() - static_cast<std::size_t>(places));
  }
  return out;
}

double to_double(const Rational& value) { return value.convert_to<double>(); }

}  // namespace baccarat
