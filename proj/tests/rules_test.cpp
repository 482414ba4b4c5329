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


#include "baccarat/rules.hpp"

#include <array>
#include <stdexcept>

#include <gtest/gtest.h>

namespace baccarat {
namespace {

std::array<CardValue, 2> hand(int a, int b) { return {CardValue(a), CardValue(b)}; }

TEST(CardValue, RejectsOutOfRange) {
  EXPECT_THROW(CardValue(10), std::invalid_argument);
  EXPECT_THROW(CardValue(-1), std::invalid_argument);
  EXPECT_EQ(CardValue(9).value(), 9);
}

TEST(HandTotal, IsSumModTen) {
  const std::array<CardValue, 3> cards = {CardValue(7), CardValue(8), CardValue(9)};
  EXPECT_EQ(hand_total(cards).value(), 4);
  const std::array<CardValue, 2> ten = {CardValue(0), CardValue(0)};
  EXPECT_EQ(hand_total(ten).value(), 0);
  EXPECT_TRUE(HandTotal(8).is_natural());
  EXPECT_FALSE(HandTotal(7).is_natural());
}

TEST(InfoSet, IndexRoundTripsAndParses) {
  for (int i = 0; i < BankerInfoSet::kCount; ++i) {
    const auto info = BankerInfoSet::from_index(i);
    EXPECT_EQ(info.index(), i);
    EXPECT_EQ(BankerInfoSet::parse(info.to_string()), info);
  }
  EXPECT_EQ(BankerInfoSet::parse("(6,-)").to_string(), "(6,-)");
  EXPECT_TRUE(BankerInfoSet::parse("6,none").player_stood());
  EXPECT_EQ(BankerInfoSet::parse(" (3, 9) "), BankerInfoSet(3, 9));
  EXPECT_THROW(BankerInfoSet::parse("(8,1)"), std::invalid_argument);
  EXPECT_THROW(BankerInfoSet::parse("3-9"), std::invalid_argument);
  EXPECT_THROW(BankerInfoSet(3, 10), std::invalid_argument);
}

TEST(Table, HasFourStarredCells) {
  int starred = 0;
  for (const auto& info : BankerInfoSet::all())
    if (banker_table_action(info) == TableCell::Starred) ++starred;
  EXPECT_EQ(starred, 4);
  EXPECT_EQ(banker_table_action(BankerInfoSet(3, 8)), TableCell::Stand);
  EXPECT_EQ(banker_table_action(BankerInfoSet(5, 5)), TableCell::Draw);
  EXPECT_EQ(banker_table_action(BankerInfoSet(7, std::nullopt)), TableCell::Stand);
  EXPECT_EQ(banker_table_action(BankerInfoSet(2, 9)), TableCell::Draw);
}

TEST(PlayerRule, FiveFollowsRow) {
  EXPECT_EQ(mandated_player_action(HandTotal(5), PlayerRow::DrawOn5), Action::Draw);
  EXPECT_EQ(mandated_player_action(HandTotal(5), PlayerRow::StandOn5), Action::Stand);
  EXPECT_EQ(mandated_player_action(HandTotal(4), PlayerRow::StandOn5), Action::Draw);
  EXPECT_EQ(mandated_player_action(HandTotal(6), PlayerRow::DrawOn5), Action::Stand);
  EXPECT_THROW(mandated_player_action(HandTotal(8), PlayerRow::DrawOn5), std::invalid_argument);
}

TEST(Variant, OptionalCellsAndLimits) {
  EXPECT_EQ(Variant::classic().optional_cells().size(), 4u);
  EXPECT_EQ(Variant::parlor().optional_cells().size(), 4u);
  const auto modern = Variant::modern();
  ASSERT_EQ(modern.optional_cells().size(), 2u);
  EXPECT_EQ(modern.optional_cells()[0], BankerInfoSet(3, 9));
  EXPECT_EQ(modern.optional_cells()[1], BankerInfoSet(5, 4));
  EXPECT_EQ(modern.mandated_action(BankerInfoSet(4, 1)), Action::Stand);
  EXPECT_EQ(modern.mandated_action(BankerInfoSet(6, std::nullopt)), Action::Stand);
  EXPECT_EQ(Variant::from_name("crockford").optional_cells().size(), 3u);
  EXPECT_THROW(Variant::from_name("baccarat"), std::invalid_argument);
  EXPECT_THROW(Variant::classic().check_alpha(Rational(1, 15)), std::domain_error);
  EXPECT_NO_THROW(Variant::modern().check_alpha(Rational(1, 3)));
  EXPECT_THROW(Variant::modern().check_alpha(Rational(2, 5)), std::domain_error);
}

TEST(Variant, StrategyCodeOrdersCells) {
  const auto s = Variant::classic().strategy("DSDS");
  EXPECT_EQ(s.at(BankerInfoSet(3, 9)), Action::Draw);
  EXPECT_EQ(s.at(BankerInfoSet(4, 1)), Action::Stand);
  EXPECT_EQ(s.at(BankerInfoSet(5, 4)), Action::Draw);
  EXPECT_EQ(s.at(BankerInfoSet(6, std::nullopt)), Action::Stand);
  EXPECT_EQ(s.at(BankerInfoSet(0, 0)), Action::Draw);
  EXPECT_THROW(Variant::classic().strategy("DSD"), std::invalid_argument);
  EXPECT_THROW(Variant::classic().strategy("DSDX"), std::invalid_argument);
  auto bad = s;
  bad.set(BankerInfoSet(7, 2), Action::Draw);
  EXPECT_THROW(Variant::classic().validate(bad), std::invalid_argument);
}

TEST(Settle, ConservesMoney) {
  for (const Rational alpha : {Rational(0), Rational(1, 20), Rational(1, 3)}) {
    for (Winner w : {Winner::Player, Winner::Banker, Winner::Tie}) {
      const auto s = settle(w, alpha);
      EXPECT_EQ(s.player + s.banker + s.casino, 0);
    }
  }
  const auto b = settle(Winner::Banker, Rational(1, 20));
  EXPECT_EQ(b.banker, Rational(19, 20));
  EXPECT_EQ(b.casino, Rational(1, 20));
  EXPECT_THROW(settle(Winner::Banker, Rational(1)), std::domain_error);
  EXPECT_THROW(settle(Winner::Banker, Rational(-1, 2)), std::domain_error);
}

TEST(Coup, NaturalSkipsStrategy) {
  const auto p = hand(4, 4);
  const auto b = hand(3, 3);
  int calls = 0;
  const auto r = resolve_coup(p, b, {}, PlayerRow::DrawOn5, [&](const BankerInfoSet&) {
    ++calls;
    return Action::Draw;
  });
  EXPECT_TRUE(r.natural);
  EXPECT_EQ(calls, 0);
  EXPECT_EQ(r.winner, Winner::Player);
  EXPECT_FALSE(r.banker_info.has_value());
}

TEST(Coup, NaturalTie) {
  const auto p = hand(9, 0);
  const auto b = hand(5, 4);
  const auto r = resolve_coup(p, b, {}, PlayerRow::DrawOn5,
                              [](const BankerInfoSet&) { return Action::Draw; });
  EXPECT_EQ(r.winner, Winner::Tie);
}

TEST(Coup, BankerSeesThirdCard) {
  // Player 2+3 = 5 draws a 4 -> 9; Banker 6 sees (6,4), stands per table.
  const auto p = hand(2, 3);
  const auto b = hand(1, 5);
  const auto strategy = Variant::classic().strategy("DSDS");
  const auto out = play_coup(p, b, {CardValue(4), CardValue(3)}, PlayerRow::DrawOn5, strategy,
                             Rational(1, 20));
  ASSERT_TRUE(out.resolution.banker_info.has_value());
  EXPECT_EQ(*out.resolution.banker_info, BankerInfoSet(6, 4));
  EXPECT_FALSE(out.resolution.banker_third.has_value());
  EXPECT_EQ(out.resolution.player_final.value(), 9);
  EXPECT_EQ(out.resolution.winner, Winner::Player);
  EXPECT_EQ(out.player_payoff, 1);
  EXPECT_EQ(out.banker_payoff, -1);
}

TEST(Coup, StandOnFiveAndBankerDrawsOnStood) {
  const auto p = hand(2, 3);
  const auto b = hand(0, 6);
  const auto strategy = Variant::classic().strategy("DSDD");
  const auto out = play_coup(p, b, {std::nullopt, CardValue(3)}, PlayerRow::StandOn5, strategy,
                             Rational(1, 20));
  EXPECT_EQ(*out.resolution.banker_info, BankerInfoSet(6, std::nullopt));
  EXPECT_EQ(out.resolution.banker_final.value(), 9);
  EXPECT_EQ(out.banker_payoff, Rational(19, 20));
  EXPECT_EQ(out.casino_take, Rational(1, 20));
}

TEST(Coup, MissingCardThrows) {
  const auto p = hand(1, 1);
  const auto b = hand(0, 0);
  EXPECT_THROW(resolve_coup(p, b, {}, PlayerRow::DrawOn5,
                            [](const BankerInfoSet&) { return Action::Draw; }),
               std::invalid_argument);
  EXPECT_THROW(resolve_coup(p, b, {CardValue(1), std::nullopt}, PlayerRow::DrawOn5,
                            [](const BankerInfoSet&) { return Action::Draw; }),
               std::invalid_argument);
}

}  // namespace
}  // namespace baccarat
