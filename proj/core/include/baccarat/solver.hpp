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

#ifndef BACCARAT_SOLVER_HPP_
#define BACCARAT_SOLVER_HPP_

#include <optional>
#include <string>
#include <vector>

#include "baccarat/game.hpp"
#include "baccarat/rational.hpp"

namespace baccarat {

enum class EquilibriumKind { Pure, Mixed };

// A strategy profile with the expected payoff each side receives under it.
// For zero-sum solutions row_value is the game value and column_value its
// negation.
struct EquilibriumReport {
  MixedStrategy row_strategy;
  MixedStrategy column_strategy;
  Rational row_value;
  Rational column_value;
  std::vector<std::size_t> row_support;
  std::vector<std::size_t> column_support;
  bool unique = false;
  EquilibriumKind kind = EquilibriumKind::Mixed;
};

struct EliminationStep {
  enum class Side { Row, Column };
  Side side;
  std::size_t index;  // in the original game
  std::string label;
  std::string dominated_by;
};

struct EliminationResult {
  ReducedGame game;
  std::vector<std::size_t> kept_rows;
  std::vector<std::size_t> kept_columns;
  std::vector<EliminationStep> log;
};

// Iterated removal of strictly dominated strategies: columns against the
// Banker matrix (by another column or by a mixture of two), rows against the
// Player matrix. Repeats until nothing changes.
EliminationResult eliminate_strictly_dominated(const ReducedGame& game);

// Row player maximizes A over p = Pr(row 1); column player minimizes.
// Throws std::invalid_argument unless A is 2 x n with n >= 1.
EquilibriumReport solve_zero_sum_2xn(const Matrix& a);

struct NashEnumeration {
  std::vector<EquilibriumReport> equilibria;
  // False when the game is degenerate; the list may then miss equilibria.
  bool complete = false;
};

NashEnumeration enumerate_nash_2xn(const Matrix& a, const Matrix& b);

struct DegeneracyWitness {
  enum class Side { Row, Column };
  Side side;
  MixedStrategy strategy;
  std::vector<std::size_t> best_responses;
};

struct NondegeneracyResult {
  bool nondegenerate = true;
  std::optional<DegeneracyWitness> witness;
};

// No mixed strategy with support size s has more than s pure best responses.
NondegeneracyResult is_nondegenerate(const Matrix& a, const Matrix& b);

// Exact best-response and value check of a reported profile.
bool verify_equilibrium(const Matrix& a, const Matrix& b, const EquilibriumReport& report);

// What each side can guarantee on its own matrix.
Rational row_safety_level(const Matrix& a);
Rational column_safety_level(const Matrix& b);

}  // namespace baccarat

#endif  // BACCARAT_SOLVER_HPP_
