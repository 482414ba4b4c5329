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

#ifndef BACCARAT_RULES_HPP_
#define BACCARAT_RULES_HPP_

#include <array>
#include <compare>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "baccarat/rational.hpp"

namespace baccarat {

// Card value 0..9. Tens and court cards count 0, the ace 1.
class CardValue {
 public:
  constexpr explicit CardValue(int value) : value_(checked(value)) {}

  constexpr int value() const { return value_; }
  friend constexpr auto operator<=>(CardValue, CardValue) = default;

 private:
  static constexpr int checked(int v) {
    if (v < 0 || v > 9) throw std::invalid_argument("card value out of range");
    return v;
  }
  int value_;
};

class HandTotal {
 public:
  constexpr explicit HandTotal(int total) : total_(checked(total)) {}

  constexpr int value() const { return total_; }
  // Only meaningful for a two-card hand.
  constexpr bool is_natural() const { return total_ >= 8; }
  friend constexpr auto operator<=>(HandTotal, HandTotal) = default;

 private:
  static constexpr int checked(int t) {
    if (t < 0 || t > 9) throw std::invalid_argument("hand total out of range");
    return t;
  }
  int total_;
};

enum class PlayerRow { StandOn5, DrawOn5 };
enum class Action { Draw, Stand };
using BankerAction = Action;

// Entry of the Banker decision table: either a fixed move or a cell whose
// best move depends on the Player's strategy.
enum class TableCell { Draw, Stand, Starred };

std::string_view to_string(PlayerRow row);
std::string_view to_string(Action action);
char to_char(Action action);
char to_char(TableCell cell);

// What Banker sees before deciding: own two-card total (0..7) and Player's
// third card, or nothing if Player stood.
class BankerInfoSet {
 public:
  static constexpr int kCount = 88;
  static constexpr int kColumns = 11;  // player card 0..9, then "stood"

  BankerInfoSet(int banker_total, std::optional<int> player_card);

  static BankerInfoSet from_index(int index);
  static const std::array<BankerInfoSet, kCount>& all();

  int banker_total() const { return banker_total_; }
  std::optional<int> player_card() const {
    return player_card_ == kStood ? std::nullopt : std::optional<int>(player_card_);
  }
  bool player_stood() const { return player_card_ == kStood; }
  int index() const { return banker_total_ * kColumns + player_card_; }

  // "(3,9)" or "(6,-)".
  std::string to_string() const;
  // Accepts the to_string() form; "-", "x", "none" or "stand" for a stand.
  static BankerInfoSet parse(std::string_view text);

  friend auto operator<=>(const BankerInfoSet& a, const BankerInfoSet& b) {
    return a.index() <=> b.index();
  }
  friend bool operator==(const BankerInfoSet& a, const BankerInfoSet& b) {
    return a.index() == b.index();
  }

 private:
  static constexpr int kStood = 10;
  BankerInfoSet() = default;
  int banker_total_ = 0;
  int player_card_ = 0;
};

HandTotal hand_total(std::span<const CardValue> cards);

// The classic Banker table: fixed moves on 84 cells, Starred on
// (3,9), (4,1), (5,4) and (6,-).
TableCell banker_table_action(const BankerInfoSet& info);
const std::array<BankerInfoSet, 4>& starred_cells();

// Player draws on 0-4, stands on 6-7 and follows the row on 5.
Action mandated_player_action(HandTotal total, PlayerRow row);

// A pure Banker strategy: a move for each of the 88 info sets.
class BankerStrategy {
 public:
  explicit BankerStrategy(const std::array<Action, BankerInfoSet::kCount>& moves)
      : moves_(moves) {}

  // Table moves on the 84 determined cells; `starred` assigns the four
  // starred cells in the order of starred_cells().
  static BankerStrategy from_table(std::span<const Action, 4> starred);

  Action at(const BankerInfoSet& info) const { return moves_[info.index()]; }
  void set(const BankerInfoSet& info, Action action) { moves_[info.index()] = action; }

  friend bool operator==(const BankerStrategy&, const BankerStrategy&) = default;

 private:
  std::array<Action, BankerInfoSet::kCount> moves_;
};

enum class VariantKind { Parlor, Classic, Modern, Custom };

// Which info sets Banker may choose freely. Every other cell is mandated:
// its table move, or Stand on a starred cell the variant does not free.
class Variant {
 public:
  static Variant parlor();
  static Variant classic();
  static Variant modern();
  static Variant custom(std::vector<BankerInfoSet> optional_cells);
  // "parlor", "classic", "modern" or "crockford".
  static Variant from_name(std::string_view name);

  VariantKind kind() const { return kind_; }
  std::string name() const;
  // Sorted by info set index.
  const std::vector<BankerInfoSet>& optional_cells() const { return optional_; }
  bool is_optional(const BankerInfoSet& info) const;
  Action mandated_action(const BankerInfoSet& info) const;

  // Exclusive upper end of the commission range on which the variant's
  // reduced game is built: 1/15, or 2/5 for Modern.
  Rational alpha_limit() const;
  void check_alpha(const Rational& alpha) const;

  // `assignment` follows optional_cells() order; "DSDS" style codes too.
  BankerStrategy strategy(std::span<const Action> assignment) const;
  BankerStrategy strategy(std::string_view code) const;
  // Throws std::invalid_argument if a mandated cell is violated.
  void validate(const BankerStrategy& strategy) const;

 private:
  Variant(VariantKind kind, std::vector<BankerInfoSet> optional);
  VariantKind kind_;
  std::vector<BankerInfoSet> optional_;
};

struct DrawCards {
  std::optional<CardValue> player_third;
  std::optional<CardValue> banker_third;
};

enum class Winner { Player, Banker, Tie };

struct CoupResolution {
  HandTotal player_final{0};
  HandTotal banker_final{0};
  bool natural = false;
  std::optional<CardValue> player_third;
  std::optional<CardValue> banker_third;
  std::optional<BankerInfoSet> banker_info;
  Winner winner = Winner::Tie;
};

struct CoupOutcome {
  CoupResolution resolution;
  Rational player_payoff;
  Rational banker_payoff;
  Rational casino_take;
};

struct Settlement {
  Rational player;
  Rational banker;
  Rational casino;
};

// Banker win pays 1 - alpha to Banker and alpha to the house; Player win
// costs Banker 1; ties move no money.
Settlement settle(Winner winner, const Rational& alpha);
void check_commission(const Rational& alpha);

// Resolves one coup. `decide` maps a BankerInfoSet to an Action and is only
// called when neither side holds a natural.
template <class Decide>
CoupResolution resolve_coup(std::span<const CardValue, 2> player,
                            std::span<const CardValue, 2> banker,
                            const DrawCards& draws, PlayerRow row,
                            Decide&& decide) {
  CoupResolution out;
  const int p2 = (player[0].value() + player[1].value()) % 10;
  const int b2 = (banker[0].value() + banker[1].value()) % 10;
  int p_final = p2;
  int b_final = b2;
  if (p2 >= 8 || b2 >= 8) {
    out.natural = true;
  } else {
    std::optional<int> observed;
    if (mandated_player_action(HandTotal(p2), row) == Action::Draw) {
      if (!draws.player_third) {
        throw std::invalid_argument("Player must draw but no third card given");
      }
      out.player_third = draws.player_third;
      observed = draws.player_third->value();
      p_final = (p2 + draws.player_third->value()) % 10;
    }
    const BankerInfoSet info(b2, observed);
    out.banker_info = info;
    if (decide(info) == Action::Draw) {
      if (!draws.banker_third) {
        throw std::invalid_argument("Banker must draw but no third card given");
      }
      out.banker_third = draws.banker_third;
      b_final = (b2 + draws.banker_third->value()) % 10;
    }
  }
  out.player_final = HandTotal(p_final);
  out.banker_final = HandTotal(b_final);
  out.winner = p_final > b_final   ? Winner::Player
               : b_final > p_final ? Winner::Banker
                                   : Winner::Tie;
  return out;
}

CoupOutcome play_coup(std::span<const CardValue, 2> player,
                      std::span<const CardValue, 2> banker,
                      const DrawCards& draws, PlayerRow row,
                      const BankerStrategy& strategy, const Rational& alpha);

}  // namespace baccarat

#endif  // BACCARAT_RULES_HPP_
