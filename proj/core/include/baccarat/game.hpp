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

#ifndef BACCARAT_GAME_HPP_
#define BACCARAT_GAME_HPP_

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "baccarat/rational.hpp"
#include "baccarat/rules.hpp"

namespace baccarat {

// Dense row-major matrix of exact payoffs.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return data_.empty(); }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Matrix negated() const;
  Matrix select_columns(const std::vector<std::size_t>& keep) const;
  Matrix select_rows(const std::vector<std::size_t>& keep) const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

// Probability vector over a player's pure strategies.
class MixedStrategy {
 public:
  MixedStrategy() = default;
  // Throws std::invalid_argument unless entries are >= 0 and sum to 1.
  explicit MixedStrategy(std::vector<Rational> probabilities);

  static MixedStrategy pure(std::size_t size, std::size_t index);
  // Two-row strategy that plays row 1 with probability p.
  static MixedStrategy two_point(const Rational& p);

  std::size_t size() const { return probabilities_.size(); }
  const Rational& operator[](std::size_t i) const { return probabilities_[i]; }
  const std::vector<Rational>& probabilities() const { return probabilities_; }
  std::vector<std::size_t> support() const;
  bool is_pure() const { return support().size() == 1; }

  friend bool operator==(const MixedStrategy&, const MixedStrategy&) = default;

 private:
  std::vector<Rational> probabilities_;
};

// x^T M y
Rational expected_payoff(const Matrix& m, const MixedStrategy& row, const MixedStrategy& col);

// Two-row game after fixing the Banker's mandated cells. Rows are
// StandOn5 and DrawOn5; column j assigns the optional cells by `columns[j]`
// (one action per cell, in `optional_cells` order).
struct ReducedGame {
  std::vector<std::string> row_labels;
  std::vector<std::string> column_labels;
  std::vector<BankerInfoSet> optional_cells;
  std::vector<std::vector<Action>> columns;
  Matrix player_payoff;  // A
  Matrix banker_payoff;  // B at `alpha`
  Rational alpha;

  std::size_t rows() const { return player_payoff.rows(); }
  std::size_t cols() const { return player_payoff.cols(); }
  std::size_t column_index(std::string_view label) const;
};

std::string column_label(const std::vector<Action>& assignment);

}  // namespace baccarat

#endif  // BACCARAT_GAME_HPP_
