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

#ifndef BACCARAT_PUNTO_HPP_
#define BACCARAT_PUNTO_HPP_

#include <span>

#include "baccarat/oracle.hpp"
#include "baccarat/rational.hpp"
#include "baccarat/rules.hpp"

namespace baccarat {

// Punto banco: Player draws on 0-5, Banker follows the table with draws on
// (3,9) and (5,4) and stands on (4,1) and (6,-).
BankerStrategy punto_banker_strategy();
inline constexpr PlayerRow kPuntoPlayerRow = PlayerRow::DrawOn5;

struct PuntoReport {
  Rational player_win;  // P
  Rational banker_win;  // B
  Rational tie;         // T
  Rational edge_player;  // house gain per unit on Player: B - P
  Rational edge_banker;  // house gain per unit on Banker at 19:20: P - 19B/20
  Rational edge_chemin;  // house take per unit at chemin de fer: B/20
};

// P, B and T by brute-force enumeration; edges left at zero.
PuntoReport punto_probabilities();
// Probabilities plus the three house edges.
PuntoReport punto_edges();

struct DemandSplit {
  Rational matched;      // min(s, y)
  Rational unfulfilled;  // |s - y|
};

// Player-side stakes against the amount the Banker puts up.
DemandSplit unfulfilled_demand(std::span<const Rational> stakes, const Rational& banker_offer);

}  // namespace baccarat

#endif  // BACCARAT_PUNTO_HPP_
