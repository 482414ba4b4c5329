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

#include "baccarat/punto.hpp"

#include <array>
#include <stdexcept>

namespace baccarat {

BankerStrategy punto_banker_strategy() {
  static constexpr std::array<Action, 2> kOptional = {Action::Draw, Action::Draw};
  return Variant::modern().strategy(kOptional);
}

PuntoReport punto_probabilities() {
  static const OutcomeCounts counts = oracle_outcome_counts(kPuntoPlayerRow, punto_banker_strategy());
  const Rational scale(1, kThirteenPow6);
  PuntoReport r;
  r.player_win = Rational(counts.player_wins) * scale;
  r.banker_win = Rational(counts.banker_wins) * scale;
  r.tie = Rational(counts.ties) * scale;
  return r;
}

PuntoReport punto_edges() {
  PuntoReport r = punto_probabilities();
  r.edge_player = r.banker_win - r.player_win;
  r.edge_banker = r.player_win - Rational(19, 20) * r.banker_win;
  r.edge_chemin = r.banker_win / 20;
  return r;
}

DemandSplit unfulfilled_demand(std::span<const Rational> stakes, const Rational& banker_offer) {
  if (stakes.empty()) throw std::invalid_argument("no stakes given");
  if (banker_offer <= 0) throw std::invalid_argument("Banker offer must be positive");
  Rational total = 0;
  for (const auto& x : stakes) {
    if (x <= 0) throw std::invalid_argument("stakes must be positive");
    total += x;
  }
  DemandSplit d;
  d.matched = total < banker_offer ? total : banker_offer;
  d.unfulfilled = total > banker_offer ? Rational(total - banker_offer)
                                       : Rational(banker_offer - total);
  return d;
}

}  // namespace baccarat
