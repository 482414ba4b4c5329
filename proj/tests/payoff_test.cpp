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


#include "baccarat/payoff.hpp"

#include <optional>

#include <gtest/gtest.h>

#include "support/brute_force.hpp"

namespace baccarat {
namespace {

const Rational kAlpha = Rational(1, 20);

std::optional<int> column_card(int column) {
  return column == 10 ? std::nullopt : std::optional<int>(column);
}

TEST(Distribution, TwoCardTotalsMatchRankEnumeration) {
  std::array<int, 10> counts{};
  for (int a = 0; a < 13; ++a)
    for (int b = 0; b < 13; ++b) ++counts[(brute::card(a) + brute::card(b)) % 10];
  const auto& tau = two_card_total_distribution();
  for (int t = 0; t < 10; ++t) EXPECT_EQ(tau[t], Rational(counts[t], 169)) << t;
  EXPECT_EQ(tau[0], Rational(25, 169));
  EXPECT_EQ(value_distribution()[0], Rational(4, 13));
}

TEST(Mass, NaturalOutcomeMatchesBruteForce) {
  const auto& t = brute::row_tally(true).natural;
  const Rational scale = Rational(1) / Rational(kThirteenPow6);
  const auto& n = natural_outcome();
  EXPECT_EQ(n.player_win, t.pw * scale);
  EXPECT_EQ(n.banker_win, t.bw * scale);
  EXPECT_EQ(n.tie, t.tie * scale);
  EXPECT_EQ(n.player_win, Rational(4640, 28561));
  EXPECT_EQ(n.tie, Rational(512, 28561));
}

TEST(Mass, EveryCellMatchesBruteForce) {
  const Rational scale = Rational(1) / Rational(kThirteenPow6);
  for (bool draw5 : {false, true}) {
    const auto row = draw5 ? PlayerRow::DrawOn5 : PlayerRow::StandOn5;
    const auto& tally = brute::row_tally(draw5);
    for (int i = 0; i < BankerInfoSet::kCount; ++i) {
      const auto info = BankerInfoSet::from_index(i);
      for (int a = 0; a < 2; ++a) {
        const auto& m = info_set_mass(info, row, a == 0 ? Action::Draw : Action::Stand);
        const auto& t = tally.cell[info.banker_total() * 11 + (info.player_stood() ? 10 : *info.player_card())][a];
        ASSERT_EQ(m.player_win, t.pw * scale) << info.to_string();
        ASSERT_EQ(m.banker_win, t.bw * scale) << info.to_string();
        ASSERT_EQ(m.tie, t.tie * scale) << info.to_string();
      }
    }
  }
}

TEST(Mass, RowTotalsAreOne) {
  for (auto row : {PlayerRow::StandOn5, PlayerRow::DrawOn5}) {
    OutcomeMass sum = natural_outcome();
    for (const auto& info : BankerInfoSet::all()) sum += info_set_mass(info, row, Action::Stand);
    EXPECT_EQ(sum.total(), 1);
  }
}

TEST(Improvement, MatchesBruteForceEverywhere) {
  for (const Rational alpha : {Rational(0), kAlpha}) {
    for (bool draw5 : {false, true}) {
      const auto row = draw5 ? PlayerRow::DrawOn5 : PlayerRow::StandOn5;
      for (int total = 0; total < 8; ++total) {
        for (int column = 0; column <= 10; ++column) {
          const BankerInfoSet info(total, column_card(column));
          ASSERT_EQ(improvement_at_info_set(info, row, alpha),
                    brute::improvement(total, column, draw5, alpha))
              << info.to_string();
        }
      }
    }
  }
}

TEST(Improvement, FrozenValues) {
  // Six-card enumeration gives these for Player drawing on 5 at 1/20.
  EXPECT_EQ(brute::improvement(6, 10, true, kAlpha), Rational(7, 104));
  EXPECT_EQ(brute::improvement(4, 1, true, kAlpha), Rational(1, 390));
  EXPECT_EQ(improvement_at_info_set(BankerInfoSet(6, std::nullopt), PlayerRow::DrawOn5, kAlpha),
            Rational(7, 104));
  EXPECT_EQ(improvement_at_info_set(BankerInfoSet(4, 1), PlayerRow::DrawOn5, kAlpha),
            Rational(1, 390));
  EXPECT_LT(improvement_at_info_set(BankerInfoSet(7, 5), PlayerRow::DrawOn5, kAlpha), 0);
}

TEST(Improvement, StatsOccurrenceIsConditioningMass) {
  const auto s = info_set_stats(BankerInfoSet(6, std::nullopt), PlayerRow::DrawOn5, kAlpha);
  const auto& t = brute::row_tally(true).cell[6 * 11 + 10][0];
  EXPECT_EQ(s.occurrence, Rational(t.n(), kThirteenPow6));
  EXPECT_EQ(s.improvement(), s.e_draw - s.e_stand);
}

TEST(Classify, ReproducesTableBelowBound) {
  for (const Rational alpha : {Rational(0), Rational(1, 100), kAlpha, Rational(33, 500)}) {
    const auto c = classify_info_sets(alpha);
    EXPECT_TRUE(c.matches_table()) << to_fraction_string(alpha);
    EXPECT_EQ(c.starred().size(), 4u);
  }
}

TEST(Classify, ChangesAtBound) {
  EXPECT_FALSE(classify_info_sets(Rational(1, 15)).matches_table());
  EXPECT_FALSE(classify_info_sets(Rational(1, 15) + Rational(1, 1000000)).matches_table());
  EXPECT_EQ(classify_info_sets(Rational(1, 15)).at(BankerInfoSet(6, 6)), TableCell::Starred);
}

TEST(Decomposed, MatchesBruteForceAssembly) {
  const auto variant = Variant::classic();
  for (const char* code : {"SSSS", "DSDS", "DSDD", "DDDD", "SDSD"}) {
    const auto strategy = variant.strategy(code);
    for (bool draw5 : {false, true}) {
      const auto& tally = brute::row_tally(draw5);
      std::int64_t pw = tally.natural.pw, bw = tally.natural.bw;
      for (const auto& info : BankerInfoSet::all()) {
        const auto& t = tally.cell[info.banker_total() * 11 +
                                   (info.player_stood() ? 10 : *info.player_card())]
                                  [strategy.at(info) == Action::Draw ? 0 : 1];
        pw += t.pw;
        bw += t.bw;
      }
      const Rational scale = Rational(1) / Rational(kThirteenPow6);
      const auto got = decomposed_payoff(draw5 ? PlayerRow::DrawOn5 : PlayerRow::StandOn5,
                                         strategy, kAlpha);
      EXPECT_EQ(got.player, (pw - bw) * scale) << code;
      EXPECT_EQ(got.banker, (Rational(bw) * (1 - kAlpha) - pw) * scale) << code;
    }
  }
}

TEST(ReducedGame, ClassicHasSixteenColumns) {
  const auto g = build_reduced_game(Variant::classic(), kAlpha);
  EXPECT_EQ(g.rows(), 2u);
  EXPECT_EQ(g.cols(), 16u);
  EXPECT_EQ(g.column_labels.front(), "SSSS");
  EXPECT_EQ(g.column_labels.back(), "DDDD");
  EXPECT_EQ(g.column_labels[g.column_index("DSDS")], "DSDS");
  EXPECT_THROW(build_reduced_game(Variant::classic(), Rational(1, 10)), std::domain_error);
  EXPECT_NO_THROW(build_reduced_game(Variant::classic(), Rational(1, 10), DomainCheck::Skip));
}

TEST(ReducedGame, ParlorIsZeroSum) {
  const auto g = build_reduced_game(Variant::parlor(), 0);
  EXPECT_EQ(g.banker_payoff, g.player_payoff.negated());
}

TEST(BestResponse, BankerAgainstDrawOn5) {
  const auto br = banker_best_response(MixedStrategy::pure(2, 1), Variant::classic(), kAlpha);
  EXPECT_EQ(br.label, "DDDD");
  EXPECT_TRUE(br.unique);
}

TEST(BestResponse, TiedCellIsReported) {
  // The (6,6) cell is not optional in any named variant; use a custom one
  // at the boundary commission where its improvement vanishes.
  const auto v = Variant::custom({BankerInfoSet(6, 6)});
  const auto br = banker_best_response(MixedStrategy::pure(2, 1), v, Rational(1, 15));
  EXPECT_FALSE(br.unique);
  EXPECT_EQ(br.maximizers.front().size(), 2u);
}

}  // namespace
}  // namespace baccarat
