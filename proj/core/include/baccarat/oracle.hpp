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

#ifndef BACCARAT_ORACLE_HPP_
#define BACCARAT_ORACLE_HPP_

#include <cstdint>

#include "baccarat/payoff.hpp"
#include "baccarat/rules.hpp"

namespace baccarat {

// Weighted outcome counts over all 13^6 denomination sequences (two cards
// each, then one third card per side). Counts sum to kThirteenPow6.
struct OutcomeCounts {
  std::int64_t player_wins = 0;
  std::int64_t banker_wins = 0;
  std::int64_t ties = 0;

  std::int64_t total() const { return player_wins + banker_wins + ties; }
  friend bool operator==(const OutcomeCounts&, const OutcomeCounts&) = default;
};

// Brute force: every coup is resolved with the rules engine. Independent
// of the per-info-set decomposition in payoff.hpp.
OutcomeCounts oracle_outcome_counts(PlayerRow row, const BankerStrategy& strategy);

PayoffPair oracle_payoff_entry(PlayerRow row, const BankerStrategy& strategy,
                               const Rational& alpha);

PayoffPair payoffs_from_counts(const OutcomeCounts& counts, const Rational& alpha);

}  // namespace baccarat

#endif  // BACCARAT_ORACLE_HPP_
