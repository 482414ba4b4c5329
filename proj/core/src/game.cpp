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

#include "baccarat/game.hpp"

#include <stdexcept>

namespace baccarat {

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw std::invalid_argument("ragged matrix literal");
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

Matrix Matrix::negated() const {
  Matrix out = *this;
  for (auto& v : out.data_) v = -v;
  return out;
}

Matrix Matrix::select_columns(const std::vector<std::size_t>& keep) const {
  Matrix out(rows_, keep.size());
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t j = 0; j < keep.size(); ++j) out(r, j) = (*this)(r, keep[j]);
  return out;
}

Matrix Matrix::select_rows(const std::vector<std::size_t>& keep) const {
  Matrix out(keep.size(), cols_);
  for (std::size_t i = 0; i < keep.size(); ++i)
    for (std::size_t c = 0; c < cols_; ++c) out(i, c) = (*this)(keep[i], c);
  return out;
}

MixedStrategy::MixedStrategy(std::vector<Rational> probabilities)
    : probabilities_(std::move(probabilities)) {
  if (probabilities_.empty()) throw std::invalid_argument("empty mixed strategy");
  Rational sum = 0;
  for (const auto& p : probabilities_) {
    if (p < 0) throw std::invalid_argument("negative probability in mixed strategy");
    sum += p;
  }
  if (sum != 1) throw std::invalid_argument("mixed strategy does not sum to 1");
}

MixedStrategy MixedStrategy::pure(std::size_t size, std::size_t index) {
  if (index >= size) throw std::invalid_argument("pure strategy index out of range");
  std::vector<Rational> p(size, Rational(0));
  p[index] = 1;
  return MixedStrategy(std::move(p));
}

MixedStrategy MixedStrategy::two_point(const Rational& p) {
  if (p < 0 || p > 1) throw std::invalid_argument("probability outside [0, 1]");
  return MixedStrategy({Rational(1 - p), p});
}

std::vector<std::size_t> MixedStrategy::support() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < probabilities_.size(); ++i)
    if (probabilities_[i] > 0) out.push_back(i);
  return out;
}

Rational expected_payoff(const Matrix& m, const MixedStrategy& row, const MixedStrategy& col) {
  if (row.size() != m.rows() || col.size() != m.cols()) {
    throw std::invalid_argument("strategy sizes do not match the matrix");
  }
  Rational total = 0;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (row[r] == 0) continue;
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (col[c] == 0) continue;
      total += row[r] * col[c] * m(r, c);
    }
  }
  return total;
}

std::size_t ReducedGame::column_index(std::string_view label) const {
  for (std::size_t j = 0; j < column_labels.size(); ++j)
    if (column_labels[j] == label) return j;
  throw std::invalid_argument("no column labelled '" + std::string(label) + "'");
}

std::string column_label(const std::vector<Action>& assignment) {
  std::string out;
  for (Action a : assignment) out.push_back(to_char(a));
  return out;
}

}  // namespace baccarat
