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


#include "baccarat/montecarlo.hpp"

#include <cmath>

#include <gtest/gtest.h>

#include "baccarat/parametric.hpp"

namespace baccarat {
namespace {

SimConfig parlor_config(std::uint64_t hands, std::uint64_t seed, unsigned threads) {
  const auto sol = solve_variant(Variant::parlor(), 0);
  SimConfig c;
  c.variant = Variant::parlor();
  c.player_draw_on_5 = sol.draw_on_5_probability();
  c.banker = BankerBehavior::from_mixture(c.variant, sol.full, sol.equilibrium().column_strategy);
  c.alpha = 0;
  c.n_hands = hands;
  c.seed = seed;
  c.threads = threads;
  return c;
}

TEST(MonteCarlo, SameSeedSameResult) {
  const auto a = simulate(parlor_config(100000, 42, 1));
  const auto b = simulate(parlor_config(100000, 42, 1));
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.player_wins + a.banker_wins + a.ties, 100000u);
  EXPECT_FALSE(a.generator.empty());
}

TEST(MonteCarlo, ThreadCountDoesNotMatter) {
  const auto a = simulate(parlor_config(3 * kSimBatchSize + 17, 9, 1));
  const auto b = simulate(parlor_config(3 * kSimBatchSize + 17, 9, 4));
  EXPECT_EQ(a, b);
}

TEST(MonteCarlo, DifferentSeedsDiffer) {
  EXPECT_NE(simulate(parlor_config(50000, 1, 1)), simulate(parlor_config(50000, 2, 1)));
}

TEST(MonteCarlo, ZeroSumAccounting) {
  const auto r = simulate(parlor_config(200000, 5, 1));
  EXPECT_DOUBLE_EQ(r.mean_player + r.mean_banker + r.mean_casino, 0.0);
  EXPECT_DOUBLE_EQ(r.mean_casino, 0.0);
}

TEST(MonteCarlo, ParlorMeanWithinFourErrors) {
  const auto r = simulate(parlor_config(400000, 11, 0));
  EXPECT_LT(std::abs(r.mean_player - to_double(parlor_value())), 4 * r.std_error_player);
}

TEST(MonteCarlo, RejectsBadConfigs) {
  auto c = parlor_config(10, 1, 1);
  c.n_hands = 0;
  EXPECT_THROW(simulate(c), std::invalid_argument);
  c = parlor_config(10, 1, 1);
  c.player_draw_on_5 = Rational(3, 2);
  EXPECT_THROW(simulate(c), std::invalid_argument);
  c = parlor_config(10, 1, 1);
  c.alpha = 1;
  EXPECT_THROW(simulate(c), std::domain_error);
  c = parlor_config(10, 1, 1);
  c.banker.set_draw_probability(BankerInfoSet(7, 1), Rational(1, 2));
  EXPECT_THROW(simulate(c), std::invalid_argument);
}

TEST(MonteCarlo, MixtureMustMatchGame) {
  const auto sol = solve_variant(Variant::parlor(), 0);
  EXPECT_THROW(BankerBehavior::from_mixture(Variant::parlor(), sol.full, MixedStrategy::pure(3, 0)),
               std::invalid_argument);
  const auto b =
      BankerBehavior::from_mixture(Variant::parlor(), sol.full, sol.equilibrium().column_strategy);
  EXPECT_EQ(b.draw_probability(BankerInfoSet(6, std::nullopt)), Rational(859, 2288));
  EXPECT_EQ(b.draw_probability(BankerInfoSet(4, 1)), 0);
  EXPECT_EQ(b.draw_probability(BankerInfoSet(0, 0)), 1);
}

}  // namespace
}  // namespace baccarat
