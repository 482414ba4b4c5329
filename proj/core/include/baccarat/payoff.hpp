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

#ifndef BACCARAT_PAYOFF_HPP_
#define BACCARAT_PAYOFF_HPP_

#include <array>
#include <vector>

#include "baccarat/game.hpp"
#include "baccarat/rational.hpp"
#include "baccarat/rules.hpp"

namespace baccarat {

// Card value law for an infinite shoe: 4/13 for 0, 1/13 for 1..9.
const std::array<Rational, 10>& value_distribution();

// Law of a two-card total (sum of two independent values mod 10).
const std::array<Rational, 10>& two_card_total_distribution();

// Unconditional probability mass of a set of coups split by winner.
struct OutcomeMass {
  Rational player_win;
  Rational banker_win;
  Rational tie;

  Rational total() const { return player_win + banker_win + tie; }
  Rational player_ev() const { return player_win - banker_win; }
  Rational banker_ev(const Rational& alpha) const {
    return banker_win * (1 - alpha) - player_win;
  }
  OutcomeMass& operator+=(const OutcomeMass& other);
};

struct PayoffPair {
  Rational player;
  Rational banker;
};

// Coups ended by a natural on either side.
const OutcomeMass& natural_outcome();

// Mass of coups that reach `info` when Player follows `row` and Banker then
// takes `action`. Summing over both actions is not meaningful; the two masses
// describe the same coups under different Banker moves.
const OutcomeMass& info_set_mass(const BankerInfoSet& info, PlayerRow row, Action action);

// Banker's view of one info set, conditional on reaching it.
struct InfoSetStats {
  BankerInfoSet info;
  PlayerRow row;
  Rational alpha;
  Rational occurrence;
  Rational e_draw;
  Rational e_stand;

  Rational improvement() const { return e_draw - e_stand; }
};

InfoSetStats info_set_stats(const BankerInfoSet& info, PlayerRow row, const Rational& alpha);

// Gain to Banker from drawing rather than standing, conditional on `info`.
Rational improvement_at_info_set(const BankerInfoSet& info, PlayerRow row,
                                 const Rational& alpha);

// Per-cell verdict at a commission: Draw or Stand when that move is strictly
// better for Banker against both Player rows, Starred otherwise (including
// exact ties).
struct Classification {
  Rational alpha;
  std::array<TableCell, BankerInfoSet::kCount> cells{};

  TableCell at(const BankerInfoSet& info) const { return cells[info.index()]; }
  std::vector<BankerInfoSet> starred() const;
  bool matches_table() const;
  friend bool operator==(const Classification& a, const Classification& b) {
    return a.cells == b.cells;
  }
};

Classification classify_info_sets(const Rational& alpha);

// Expected payoffs of a pure profile, assembled from the per-info-set masses.
PayoffPair decomposed_payoff(PlayerRow row, const BankerStrategy& strategy,
                             const Rational& alpha);

enum class DomainCheck { Enforce, Skip };

// Full 2 x 2^k game over the variant's k optional cells. Columns are ordered
// as binary numbers with S=0, D=1 and the lowest-indexed optional cell most
// significant (SSSS, SSSD, SSDS, ...).
ReducedGame build_reduced_game(const Variant& variant, const Rational& alpha,
                               DomainCheck check = DomainCheck::Enforce);

struct BankerBestResponse {
  std::vector<BankerInfoSet> cells;            // the variant's optional cells
  std::vector<std::vector<Action>> maximizers; // per cell, every best move
  bool unique = true;
  // Uses Draw where both moves tie; see `unique`.
  BankerStrategy strategy{std::array<Action, BankerInfoSet::kCount>{}};
  std::string label;
  Rational expected_payoff;
};

// `player_mix` is over (StandOn5, DrawOn5).
BankerBestResponse banker_best_response(const MixedStrategy& player_mix, const Variant& variant,
                                        const Rational& alpha);

struct PlayerBestResponse {
  std::vector<PlayerRow> maximizers;
  bool unique = true;
  PlayerRow row = PlayerRow::DrawOn5;
  Rational expected_payoff;
};

// `banker_mix` is over the columns of build_reduced_game(variant, alpha).
PlayerBestResponse player_best_response(const MixedStrategy& banker_mix, const Variant& variant,
                                        const Rational& alpha);

}  // namespace baccarat

#endif  // BACCARAT_PAYOFF_HPP_
