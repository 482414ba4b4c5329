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


#include "baccarat/solver.hpp"

#include <algorithm>
#include <random>

#include <gtest/gtest.h>

#include "baccarat/parametric.hpp"
#include "baccarat/payoff.hpp"

namespace baccarat {
namespace {

ReducedGame zero_sum_game(Matrix a) {
  ReducedGame g;
  g.row_labels = {"r0", "r1"};
  for (std::size_t j = 0; j < a.cols(); ++j) g.column_labels.push_back("c" + std::to_string(j));
  g.banker_payoff = a.negated();
  g.player_payoff = std::move(a);
  return g;
}

// Value of the zero-sum game from the column side: the best mixture of at
// most two columns against the worse row.
Rational column_side_value(const Matrix& a) {
  Rational best;
  bool have = false;
  const auto consider = [&](const Rational& v) {
    if (!have || v < best) best = v;
    have = true;
  };
  for (std::size_t j = 0; j < a.cols(); ++j) consider(std::max(a(0, j), a(1, j)));
  for (std::size_t j = 0; j < a.cols(); ++j) {
    for (std::size_t k = j + 1; k < a.cols(); ++k) {
      // y on column k; row i payoff a(i,j) + y (a(i,k) - a(i,j)).
      const Rational d0 = a(0, k) - a(0, j);
      const Rational d1 = a(1, k) - a(1, j);
      if (d0 == d1) continue;
      const Rational y = (a(1, j) - a(0, j)) / (d0 - d1);
      if (y <= 0 || y >= 1) continue;
      consider(a(0, j) + y * d0);
    }
  }
  return best;
}

TEST(Elimination, PureDominance) {
  const auto r = eliminate_strictly_dominated(zero_sum_game(Matrix{{1, 0}, {2, 1}}));
  EXPECT_EQ(r.kept_rows, (std::vector<std::size_t>{1}));
  EXPECT_EQ(r.kept_columns, (std::vector<std::size_t>{1}));
  EXPECT_EQ(r.log.size(), 2u);
}

TEST(Elimination, MixtureDominanceRemovesMiddleColumn) {
  // Column 1 is beaten by the even mix of columns 0 and 2, but by neither alone.
  const auto r = eliminate_strictly_dominated(zero_sum_game(Matrix{{0, 3, 4}, {4, 3, 0}}));
  EXPECT_EQ(r.kept_columns, (std::vector<std::size_t>{0, 2}));
}

TEST(Elimination, ClassicReducesToFiveColumns) {
  for (const Rational alpha : {Rational(0), Rational(1, 30), Rational(1, 20)}) {
    const auto r = eliminate_strictly_dominated(build_reduced_game(Variant::classic(), alpha));
    EXPECT_EQ(r.game.column_labels,
              (std::vector<std::string>{"SSSS", "SSDS", "DSDS", "DSDD", "DDDD"}));
    EXPECT_EQ(r.game.rows(), 2u);
  }
}

TEST(ZeroSum, MatchingPennies) {
  const auto r = solve_zero_sum_2xn(Matrix{{1, -1}, {-1, 1}});
  EXPECT_EQ(r.row_strategy, MixedStrategy::two_point(Rational(1, 2)));
  EXPECT_EQ(r.row_value, 0);
  EXPECT_TRUE(r.unique);
}

TEST(ZeroSum, GenericTwoByTwo) {
  const auto r = solve_zero_sum_2xn(Matrix{{3, 1}, {1, 2}});
  EXPECT_EQ(r.row_strategy, MixedStrategy({Rational(1, 3), Rational(2, 3)}));
  EXPECT_EQ(r.column_strategy, MixedStrategy({Rational(1, 3), Rational(2, 3)}));
  EXPECT_EQ(r.row_value, Rational(5, 3));
  EXPECT_EQ(r.column_value, Rational(-5, 3));
  EXPECT_EQ(row_safety_level(Matrix{{3, 1}, {1, 2}}), Rational(5, 3));
}

TEST(ZeroSum, SaddlePoint) {
  const auto r = solve_zero_sum_2xn(Matrix{{2, 3}, {1, 0}});
  EXPECT_EQ(r.kind, EquilibriumKind::Pure);
  EXPECT_EQ(r.row_value, 2);
}

TEST(ZeroSum, FlatSegmentIsNotUnique) {
  // Both rows give 1 against column 0; every p is optimal.
  const auto r = solve_zero_sum_2xn(Matrix{{1, 2}, {1, 3}});
  EXPECT_EQ(r.row_value, 1);
  EXPECT_FALSE(r.unique);
}

TEST(ZeroSum, RandomGamesAgreeWithColumnSideAndGrid) {
  std::mt19937_64 rng(20261016);
  std::uniform_int_distribution<int> entry(-9, 9);
  std::uniform_int_distribution<int> width(1, 6);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = width(rng);
    Matrix a(2, n);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < n; ++j) a(i, j) = entry(rng);
    const auto r = solve_zero_sum_2xn(a);
    ASSERT_EQ(r.row_value, column_side_value(a)) << "trial " << trial;
    ASSERT_TRUE(verify_equilibrium(a, a.negated(), r)) << "trial " << trial;
    for (int k = 0; k <= 64; ++k) {
      const MixedStrategy x = MixedStrategy::two_point(Rational(k, 64));
      Rational worst = expected_payoff(a, x, MixedStrategy::pure(n, 0));
      for (int j = 1; j < n; ++j) worst = std::min(worst, expected_payoff(a, x, MixedStrategy::pure(n, j)));
      ASSERT_LE(worst, r.row_value);
    }
  }
}

TEST(Nash, BattleOfTheSexes) {
  const Matrix a{{2, 0}, {0, 1}};
  const Matrix b{{1, 0}, {0, 2}};
  const auto e = enumerate_nash_2xn(a, b);
  EXPECT_TRUE(e.complete);
  ASSERT_EQ(e.equilibria.size(), 3u);
  bool found_mixed = false;
  for (const auto& eq : e.equilibria) {
    EXPECT_TRUE(verify_equilibrium(a, b, eq));
    if (eq.kind == EquilibriumKind::Mixed) {
      found_mixed = true;
      EXPECT_EQ(eq.row_strategy, MixedStrategy::two_point(Rational(1, 3)));
      EXPECT_EQ(eq.column_strategy, MixedStrategy::two_point(Rational(2, 3)));
    }
  }
  EXPECT_TRUE(found_mixed);
}

TEST(Nash, RandomGamesAreVerified) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> entry(-20, 20);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + trial % 5;
    Matrix a(2, n), b(2, n);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < n; ++j) {
        a(i, j) = entry(rng);
        b(i, j) = entry(rng);
      }
    const auto e = enumerate_nash_2xn(a, b);
    if (e.complete) ASSERT_FALSE(e.equilibria.empty()) << "trial " << trial;
    for (const auto& eq : e.equilibria) ASSERT_TRUE(verify_equilibrium(a, b, eq)) << trial;
  }
}

TEST(Degeneracy, DuplicateColumnHasWitness) {
  const Matrix a{{1, 0, 0}, {0, 1, 1}};
  const auto r = is_nondegenerate(a, a.negated());
  EXPECT_FALSE(r.nondegenerate);
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_GT(r.witness->best_responses.size(), r.witness->strategy.support().size());
  EXPECT_FALSE(enumerate_nash_2xn(a, a.negated()).complete);
}

TEST(Degeneracy, ClassicReducedGameIsNondegenerate) {
  const auto r = eliminate_strictly_dominated(build_reduced_game(Variant::classic(), Rational(1, 20)));
  EXPECT_TRUE(is_nondegenerate(r.game.player_payoff, r.game.banker_payoff).nondegenerate);
}

TEST(Verify, PerturbedDrawProbabilityFails) {
  const Rational alpha(1, 20);
  const auto sol = solve_variant(Variant::classic(), alpha);
  const auto& a = sol.full.player_payoff;
  const auto& b = sol.full.banker_payoff;
  EXPECT_TRUE(verify_equilibrium(a, b, sol.equilibrium()));
  auto bad = sol.equilibrium();
  bad.row_strategy = MixedStrategy::two_point(classic_draw_probability(alpha) + Rational(1, 1000));
  bad.row_value = expected_payoff(a, bad.row_strategy, bad.column_strategy);
  bad.column_value = expected_payoff(b, bad.row_strategy, bad.column_strategy);
  EXPECT_FALSE(verify_equilibrium(a, b, bad));
}

TEST(Safety, ColumnLevel) {
  // Column player guarantees min(4 y0, y1), best at y0 = 1/5.
  EXPECT_EQ(column_safety_level(Matrix{{4, 0}, {0, 1}}), Rational(4, 5));
}

}  // namespace
}  // namespace baccarat
