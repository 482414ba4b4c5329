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

#ifndef BACCARAT_RATIONAL_HPP_
#define BACCARAT_RATIONAL_HPP_

#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

namespace baccarat {

// Exact arithmetic everywhere in the engine. mpq_rational keeps values in
// lowest terms with a positive denominator.
using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

// Accepts integers ("3", "-2"), fractions ("1/20"), decimals ("0.05", ".5")
// and scientific notation ("1e-9", "2.5E3"). Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

// "a/b" in lowest terms, or "a" when the denominator is 1.
std::string to_fraction_string(const Rational& value);

// Fixed-point rendering rounded half away from zero, e.g. "-0.0127991074".
std::string to_decimal_string(const Rational& value, int places = 10);

double to_double(const Rational& value);

// 13^6, the number of equally likely six-card denomination sequences.
inline constexpr long long kThirteenPow6 = 4826809;

}  // namespace baccarat

#endif  // BACCARAT_RATIONAL_HPP_
