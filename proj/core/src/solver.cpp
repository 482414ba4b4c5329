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
#include <stdexcept>

namespace baccarat {
namespace {

void require_two_rows(const Matrix& m, const char* what) {
  if (m.rows() != 2 || m.cols() == 0) {
    throw std::invalid_argument(std::string(what) + " must be a non-empty 2 x n matrix");
  }
}

// Value of column j against "row 1 with probability p".
Rational line_at(const Matrix& m, std::size_t j, const Rational& p) {
  return m(0, j) + p * (m(1, j) - m(0, j));
}

// Abscissa in (0,1) where columns j and k of `m` take equal values, if any.
std::optional<Rational> crossing(const Matrix& m, std::size_t j, std::size_t k) {
  const Rational slope = (m(1, j) - m(0, j)) - (m(1, k) - m(0, k));
  if (slope == 0) return std::nullopt;
  Rational p = (m(0, k) - m(0, j)) / slope;
  if (p <= 0 || p >= 1) return std::nullopt;
  return p;
}

// Is there lambda in [0,1] with lambda*k + (1-lambda)*l > j on every live row?
bool dominated_by_pair(const Matrix& m, const std::vector<std::size_t>& rows, std::size_t j,
                       std::size_t k, std::size_t l, Rational* lambda_out) {
  Rational lo = 0, hi = 1;
  bool lo_open = false, hi_open = false;
  for (std::size_t r : rows) {
    const Rational d = m(r, k) - m(r, l);
    const Rational c = m(r, j) - m(r, l);
    if (d > 0) {
      const Rational x = c / d;
      if (x >= lo) { lo = x; lo_open = true; }
    } else if (d < 0) {
      const Rational x = c / d;
      if (x <= hi) { hi = x; hi_open = true; }
    } else if (c >= 0) {
      return false;
    }
  }
  if (lo < hi) {
    *lambda_out = (lo + hi) / 2;
    return true;
  }
  if (lo == hi && !lo_open && !hi_open) {
    *lambda_out = lo;
    return true;
  }
  return false;
}

bool dominates(const Matrix& m, const std::vector<std::size_t>& rows, std::size_t k,
               std::size_t j) {
  for (std::size_t r : rows)
    if (!(m(r, k) > m(r, j))) return false;
  return true;
}

bool row_dominates(const Matrix& m, const std::vector<std::size_t>& cols, std::size_t k,
                   std::size_t i) {
  for (std::size_t c : cols)
    if (!(m(k, c) > m(i, c))) return false;
  return true;
}

EquilibriumKind kind_of(const MixedStrategy& x, const MixedStrategy& y) {
  return x.is_pure() && y.is_pure() ? EquilibriumKind::Pure : EquilibriumKind::Mixed;
}

// Vertices of { y in simplex : A y <= v on both rows }, i.e. the column
// player's optimal strategies once v is the value.
std::vector<MixedStrategy> optimal_column_vertices(const Matrix& a, const Rational& v) {
  const std::size_t n = a.cols();
  std::vector<std::vector<Rational>> found;
  auto add = [&](std::vector<Rational> y) {
    if (std::find(found.begin(), found.end(), y) == found.end()) found.push_back(std::move(y));
  };
  for (std::size_t j = 0; j < n; ++j) {
    if (a(0, j) <= v && a(1, j) <= v) {
      std::vector<Rational> y(n, Rational(0));
      y[j] = 1;
      add(std::move(y));
    }
  }
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = j + 1; k < n; ++k) {
      for (std::size_t r = 0; r < 2; ++r) {
        const Rational denom = a(r, j) - a(r, k);
        if (denom == 0) continue;
        const Rational lambda = (v - a(r, k)) / denom;
        if (lambda <= 0 || lambda >= 1) continue;
        const std::size_t other = 1 - r;
        if (lambda * a(other, j) + (1 - lambda) * a(other, k) > v) continue;
        std::vector<Rational> y(n, Rational(0));
        y[j] = lambda;
        y[k] = 1 - lambda;
        add(std::move(y));
      }
    }
  }
  std::vector<MixedStrategy> out;
  for (auto& y : found) out.emplace_back(std::move(y));
  return out;
}

}  // namespace

EliminationResult eliminate_strictly_dominated(const ReducedGame& game) {
  const Matrix& a = game.player_payoff;
  const Matrix& b = game.banker_payoff;
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("payoff matrices differ in shape");
  }
  EliminationResult out;
  std::vector<std::size_t> rows(a.rows()), cols(a.cols());
  for (std::size_t i = 0; i < rows.size(); ++i) rows[i] = i;
  for (std::size_t j = 0; j < cols.size(); ++j) cols[j] = j;

  auto col_name = [&](std::size_t j) {
    return j < game.column_labels.size() ? game.column_labels[j] : "col" + std::to_string(j);
  };
  auto row_name = [&](std::size_t i) {
    return i < game.row_labels.size() ? game.row_labels[i] : "row" + std::to_string(i);
  };

  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t pos = 0; pos < cols.size() && !changed; ++pos) {
      const std::size_t j = cols[pos];
      std::string by;
      for (std::size_t k : cols) {
        if (k != j && dominates(b, rows, k, j)) {
          by = col_name(k);
          break;
        }
      }
      for (std::size_t x = 0; by.empty() && x < cols.size(); ++x) {
        for (std::size_t y = x + 1; by.empty() && y < cols.size(); ++y) {
          const std::size_t k = cols[x], l = cols[y];
          if (k == j || l == j) continue;
          Rational lambda;
          if (dominated_by_pair(b, rows, j, k, l, &lambda)) {
            by = to_fraction_string(lambda) + "*" + col_name(k) + " + " +
                 to_fraction_string(1 - lambda) + "*" + col_name(l);
          }
        }
      }
      if (!by.empty()) {
        out.log.push_back({EliminationStep::Side::Column, j, col_name(j), by});
        cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(pos));
        changed = true;
      }
    }
    if (changed) continue;
    for (std::size_t pos = 0; pos < rows.size() && !changed; ++pos) {
      const std::size_t i = rows[pos];
      for (std::size_t k : rows) {
        if (k != i && row_dominates(a, cols, k, i)) {
          out.log.push_back({EliminationStep::Side::Row, i, row_name(i), row_name(k)});
          rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(pos));
          changed = true;
          break;
        }
      }
    }
  }

  out.kept_rows = rows;
  out.kept_columns = cols;
  ReducedGame& g = out.game;
  g.alpha = game.alpha;
  g.optional_cells = game.optional_cells;
  for (std::size_t i : rows)
    if (i < game.row_labels.size()) g.row_labels.push_back(game.row_labels[i]);
  for (std::size_t j : cols) {
    if (j < game.column_labels.size()) g.column_labels.push_back(game.column_labels[j]);
    if (j < game.columns.size()) g.columns.push_back(game.columns[j]);
  }
  g.player_payoff = a.select_rows(rows).select_columns(cols);
  g.banker_payoff = b.select_rows(rows).select_columns(cols);
  return out;
}

EquilibriumReport solve_zero_sum_2xn(const Matrix& a) {
  require_two_rows(a, "zero-sum payoff matrix");
  const std::size_t n = a.cols();

  std::vector<Rational> candidates = {Rational(0), Rational(1)};
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = j + 1; k < n; ++k)
      if (auto p = crossing(a, j, k)) candidates.push_back(*p);
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

  auto envelope = [&](const Rational& p) {
    Rational low = line_at(a, 0, p);
    for (std::size_t j = 1; j < n; ++j) low = std::min(low, line_at(a, j, p));
    return low;
  };
  Rational value = envelope(candidates.front());
  std::vector<Rational> argmax = {candidates.front()};
  for (std::size_t i = 1; i < candidates.size(); ++i) {
    Rational f = envelope(candidates[i]);
    if (f > value) {
      value = f;
      argmax = {candidates[i]};
    } else if (f == value) {
      argmax.push_back(candidates[i]);
    }
  }

  const std::vector<MixedStrategy> columns = optimal_column_vertices(a, value);
  if (columns.empty()) throw std::logic_error("no optimal column strategy found");

  EquilibriumReport r;
  r.row_strategy = MixedStrategy::two_point(argmax.front());
  r.column_strategy = columns.front();
  r.row_value = value;
  r.column_value = -value;
  r.row_support = r.row_strategy.support();
  r.column_support = r.column_strategy.support();
  r.unique = argmax.size() == 1 && columns.size() == 1;
  r.kind = kind_of(r.row_strategy, r.column_strategy);
  return r;
}

NashEnumeration enumerate_nash_2xn(const Matrix& a, const Matrix& b) {
  require_two_rows(a, "Player payoff matrix");
  if (b.rows() != a.rows() || b.cols() != a.cols()) {
    throw std::invalid_argument("payoff matrices differ in shape");
  }
  const std::size_t n = a.cols();
  NashEnumeration out;

  auto record = [&](MixedStrategy x, MixedStrategy y) {
    EquilibriumReport r;
    r.row_value = expected_payoff(a, x, y);
    r.column_value = expected_payoff(b, x, y);
    r.row_support = x.support();
    r.column_support = y.support();
    r.kind = kind_of(x, y);
    r.row_strategy = std::move(x);
    r.column_strategy = std::move(y);
    out.equilibria.push_back(std::move(r));
  };

  for (std::size_t r = 0; r < 2; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      if (a(r, c) < a(1 - r, c)) continue;
      bool best = true;
      for (std::size_t k = 0; k < n && best; ++k) best = b(r, k) <= b(r, c);
      if (best) record(MixedStrategy::pure(2, r), MixedStrategy::pure(n, c));
    }
  }

  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = j + 1; k < n; ++k) {
      // Row mixture making the column player indifferent between j and k.
      const auto p = crossing(b, j, k);
      if (!p) continue;
      const Rational top = line_at(b, j, *p);
      bool best = true;
      for (std::size_t m = 0; m < n && best; ++m) best = line_at(b, m, *p) <= top;
      if (!best) continue;
      // Column mixture making the row player indifferent.
      const Rational denom = (a(0, j) - a(1, j)) - (a(0, k) - a(1, k));
      if (denom == 0) continue;
      const Rational lambda = (a(1, k) - a(0, k)) / denom;
      if (lambda <= 0 || lambda >= 1) continue;
      std::vector<Rational> y(n, Rational(0));
      y[j] = lambda;
      y[k] = 1 - lambda;
      record(MixedStrategy::two_point(*p), MixedStrategy(std::move(y)));
    }
  }

  out.complete = is_nondegenerate(a, b).nondegenerate;
  const bool unique = out.complete && out.equilibria.size() == 1;
  for (auto& e : out.equilibria) e.unique = unique;
  return out;
}

NondegeneracyResult is_nondegenerate(const Matrix& a, const Matrix& b) {
  require_two_rows(a, "Player payoff matrix");
  if (b.rows() != a.rows() || b.cols() != a.cols()) {
    throw std::invalid_argument("payoff matrices differ in shape");
  }
  const std::size_t n = a.cols();
  NondegeneracyResult out;

  auto column_best_responses = [&](const Rational& p) {
    Rational top = line_at(b, 0, p);
    for (std::size_t j = 1; j < n; ++j) top = std::max(top, line_at(b, j, p));
    std::vector<std::size_t> best;
    for (std::size_t j = 0; j < n; ++j)
      if (line_at(b, j, p) == top) best.push_back(j);
    return best;
  };

  // Pure rows: at most one best column.
  for (std::size_t r = 0; r < 2; ++r) {
    auto best = column_best_responses(Rational(r));
    if (best.size() > 1) {
      out.nondegenerate = false;
      out.witness = DegeneracyWitness{DegeneracyWitness::Side::Row, MixedStrategy::pure(2, r),
                                      std::move(best)};
      return out;
    }
  }
  // Pure columns: the two rows must not tie.
  for (std::size_t c = 0; c < n; ++c) {
    if (a(0, c) == a(1, c)) {
      out.nondegenerate = false;
      out.witness = DegeneracyWitness{DegeneracyWitness::Side::Column, MixedStrategy::pure(n, c),
                                      {0, 1}};
      return out;
    }
  }
  // Fully mixed rows: the best-response set only grows where lines cross.
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = j + 1; k < n; ++k) {
      const auto p = crossing(b, j, k);
      if (!p) continue;
      auto best = column_best_responses(*p);
      if (best.size() > 2) {
        out.nondegenerate = false;
        out.witness = DegeneracyWitness{DegeneracyWitness::Side::Row,
                                        MixedStrategy::two_point(*p), std::move(best)};
        return out;
      }
    }
  }
  return out;
}

bool verify_equilibrium(const Matrix& a, const Matrix& b, const EquilibriumReport& report) {
  const MixedStrategy& x = report.row_strategy;
  const MixedStrategy& y = report.column_strategy;
  if (a.rows() != b.rows() || a.cols() != b.cols() || x.size() != a.rows() ||
      y.size() != a.cols()) {
    return false;
  }
  const Rational row_payoff = expected_payoff(a, x, y);
  const Rational col_payoff = expected_payoff(b, x, y);
  if (row_payoff != report.row_value || col_payoff != report.column_value) return false;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    if (expected_payoff(a, MixedStrategy::pure(a.rows(), r), y) > row_payoff) return false;
  }
  for (std::size_t c = 0; c < a.cols(); ++c) {
    if (expected_payoff(b, x, MixedStrategy::pure(a.cols(), c)) > col_payoff) return false;
  }
  return true;
}

Rational row_safety_level(const Matrix& a) { return solve_zero_sum_2xn(a).row_value; }

Rational column_safety_level(const Matrix& b) {
  return -solve_zero_sum_2xn(b.negated()).row_value;
}

}  // namespace baccarat
