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

#include "baccarat/oracle.hpp"

#include <array>

namespace baccarat {
namespace {

// Ten, jack, queen and king all count 0.
constexpr std::array<std::int64_t, 10> kDenominations = {4, 1, 1, 1, 1, 1, 1, 1, 1, 1};

}  // namespace

OutcomeCounts oracle_outcome_counts(PlayerRow row, const BankerStrategy& strategy) {
  OutcomeCounts counts;
  const auto decide = [&](const BankerInfoSet& info) { return strategy.at(info); };
  for (int p1 = 0; p1 < 10; ++p1) {
    for (int p2 = 0; p2 < 10; ++p2) {
      const std::array<CardValue, 2> player = {CardValue(p1), CardValue(p2)};
      const std::int64_t wp = kDenominations[p1] * kDenominations[p2];
      for (int b1 = 0; b1 < 10; ++b1) {
        for (int b2 = 0; b2 < 10; ++b2) {
          const std::array<CardValue, 2> banker = {CardValue(b1), CardValue(b2)};
          const std::int64_t wb = wp * kDenominations[b1] * kDenominations[b2];
          for (int p3 = 0; p3 < 10; ++p3) {
            const std::int64_t w3 = wb * kDenominations[p3];
            for (int b3 = 0; b3 < 10; ++b3) {
              const DrawCards draws{CardValue(p3), CardValue(b3)};
              const CoupResolution r = resolve_coup(player, banker, draws, row, decide);
              const std::int64_t w = w3 * kDenominations[b3];
              switch (r.winner) {
                case Winner::Player: counts.player_wins += w; break;
                case Winner::Banker: counts.banker_wins += w; break;
                case Winner::Tie: counts.ties += w; break;
              }
            }
          }
        }
      }
    }
  }
  return counts;
}

PayoffPair payoffs_from_counts(const OutcomeCounts& counts, const Rational& alpha) {
  check_commission(alpha);
  const Rational scale(1, kThirteenPow6);
  const Rational player_wins(counts.player_wins);
  const Rational banker_wins(counts.banker_wins);
  return {(player_wins - banker_wins) * scale,
          (banker_wins * (1 - alpha) - player_wins) * scale};
}

PayoffPair oracle_payoff_entry(PlayerRow row, const BankerStrategy& strategy,
                               const Rational& alpha) {
  return payoffs_from_counts(oracle_outcome_counts(row, strategy), alpha);
}

}  // namespace baccarat
