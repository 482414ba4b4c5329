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

#include "baccarat/parametric.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace baccarat {
namespace {

const Rational kSixPower(kThirteenPow6);

MixedStrategy lift(const MixedStrategy& reduced, const std::vector<std::size_t>& kept,
                   std::size_t full_size) {
  std::vector<Rational> p(full_size, Rational(0));
  for (std::size_t i = 0; i < kept.size(); ++i) p[kept[i]] = reduced[i];
  return MixedStrategy(std::move(p));
}

EquilibriumReport lift(const EquilibriumReport& r, const EliminationResult& elim,
                       const ReducedGame& full) {
  EquilibriumReport out = r;
  out.row_strategy = lift(r.row_strategy, elim.kept_rows, full.rows());
  out.column_strategy = lift(r.column_strategy, elim.kept_columns, full.cols());
  out.row_support = out.row_strategy.support();
  out.column_support = out.column_strategy.support();
  return out;
}

// Equilibria of a game with one surviving row: that row against every best
// column. Several best columns leave a continuum of equilibria.
std::vector<EquilibriumReport> single_row_equilibria(const ReducedGame& g) {
  const Matrix& a = g.player_payoff;
  const Matrix& b = g.banker_payoff;
  Rational top = b(0, 0);
  for (std::size_t c = 1; c < b.cols(); ++c) top = std::max(top, b(0, c));
  std::vector<EquilibriumReport> out;
  for (std::size_t c = 0; c < b.cols(); ++c) {
    if (b(0, c) != top) continue;
    EquilibriumReport r;
    r.row_strategy = MixedStrategy::pure(1, 0);
    r.column_strategy = MixedStrategy::pure(b.cols(), c);
    r.row_value = a(0, c);
    r.column_value = b(0, c);
    r.row_support = {0};
    r.column_support = {c};
    r.kind = EquilibriumKind::Pure;
    out.push_back(std::move(r));
  }
  return out;
}

Rational improvement_root(const BankerInfoSet& info, PlayerRow row, bool* found) {
  const Rational i0 = improvement_at_info_set(info, row, Rational(0));
  const Rational ih = improvement_at_info_set(info, row, Rational(1, 2));
  *found = false;
  if (i0 == ih) return 0;
  const Rational root = i0 / (2 * (i0 - ih));
  *found = root > 0 && root < 1;
  return root;
}

template <class Signature>
Rational first_change(Signature&& signature) {
  const auto base = signature(Rational(0));
  const std::vector<Rational> points = crossover_points();
  for (std::size_t i = 0; i < points.size(); ++i) {
    const Rational next = i + 1 < points.size() ? points[i + 1] : Rational(1);
    if (!(signature(points[i]) == base) || !(signature((points[i] + next) / 2) == base)) {
      return points[i];
    }
  }
  return 1;
}

struct EquilibriumSignature {
  std::vector<std::pair<MixedStrategy, MixedStrategy>> profiles;
  bool unique = false;
  friend bool operator==(const EquilibriumSignature&, const EquilibriumSignature&) = default;
};

}  // namespace

Rational classic_draw_probability(const Rational& alpha) { return (9 - alpha) / (11 - 6 * alpha); }

Rational classic_banker_draw_weight() { return Rational(859, 2288); }

Rational classic_banker_value(const Rational& alpha) {
  return 8 * (84946 - 3099233 * alpha + 1668708 * alpha * alpha) / ((11 - 6 * alpha) * kSixPower);
}

Rational parlor_value() { return Rational(-679568) / (11 * kSixPower); }

Rational modern_player_value() { return Rational(-3705 * 16) / kSixPower; }

Rational modern_banker_value(const Rational& alpha) {
  return 8 * (7410 - 276593 * alpha) / kSixPower;
}

Rational banker_draw_probability(const ReducedGame& game, const MixedStrategy& columns,
                                 const BankerInfoSet& info) {
  const auto it = std::find(game.optional_cells.begin(), game.optional_cells.end(), info);
  if (it == game.optional_cells.end()) {
    throw std::invalid_argument(info.to_string() + " is not an optional cell of this game");
  }
  const auto cell = static_cast<std::size_t>(it - game.optional_cells.begin());
  if (columns.size() != game.columns.size()) {
    throw std::invalid_argument("column mixture does not match the game");
  }
  Rational p = 0;
  for (std::size_t j = 0; j < game.columns.size(); ++j)
    if (game.columns[j][cell] == Action::Draw) p += columns[j];
  return p;
}

Rational VariantSolution::draw_on_5_probability() const { return equilibrium().row_strategy[1]; }

VariantSolution solve_variant(const Variant& variant, const Rational& alpha, DomainCheck check) {
  VariantSolution s{variant, build_reduced_game(variant, alpha, check), {}, {}, false, false,
                    false, 0, 0};
  s.reduced = eliminate_strictly_dominated(s.full);
  const ReducedGame& g = s.reduced.game;

  std::vector<EquilibriumReport> found;
  if (g.rows() == 2 && alpha == 0) {
    EquilibriumReport r = solve_zero_sum_2xn(g.player_payoff);
    s.complete = r.unique;
    found.push_back(std::move(r));
  } else if (g.rows() == 2) {
    NashEnumeration e = enumerate_nash_2xn(g.player_payoff, g.banker_payoff);
    s.complete = e.complete;
    found = std::move(e.equilibria);
  } else {
    found = single_row_equilibria(g);
    s.complete = found.size() == 1;
  }
  if (found.empty()) throw std::logic_error("no equilibrium found for " + variant.name());

  s.nondegenerate = g.rows() == 2
                        ? is_nondegenerate(g.player_payoff, g.banker_payoff).nondegenerate
                        : is_nondegenerate(s.full.player_payoff, s.full.banker_payoff).nondegenerate;
  s.unique = s.complete && found.size() == 1;
  for (auto& r : found) {
    s.equilibria.push_back(lift(r, s.reduced, s.full));
    s.equilibria.back().unique = s.unique;
  }
  s.player_safety = row_safety_level(s.full.player_payoff);
  s.banker_safety = column_safety_level(s.full.banker_payoff);
  return s;
}

CommissionSweep equilibrium_curve(const Variant& variant, std::span<const Rational> alpha_grid) {
  CommissionSweep sweep;
  sweep.validity_bound = variant.alpha_limit();
  const bool classic_family =
      variant.kind() == VariantKind::Classic || variant.kind() == VariantKind::Parlor;
  const BankerInfoSet six_stood(6, std::nullopt);
  for (const Rational& alpha : alpha_grid) {
    variant.check_alpha(alpha);
    SweepSample sample{alpha, solve_variant(variant, alpha), std::nullopt};
    if (classic_family) {
      const VariantSolution& s = sample.solution;
      const EquilibriumReport& e = s.equilibrium();
      sample.matches_closed_form =
          s.unique && s.draw_on_5_probability() == classic_draw_probability(alpha) &&
          banker_draw_probability(s.full, e.column_strategy, six_stood) ==
              classic_banker_draw_weight() &&
          e.column_value == classic_banker_value(alpha) &&
          s.banker_safety == classic_banker_value(alpha) && e.row_value == parlor_value();
    }
    sweep.samples.push_back(std::move(sample));
  }
  return sweep;
}

double AlphaStarBracket::midpoint() const { return to_double((lo + hi) / 2); }

AlphaStarBracket find_alpha_star(const Rational& tolerance) {
  if (tolerance <= 0) throw std::invalid_argument("tolerance must be positive");
  const Variant classic = Variant::classic();
  const Rational player = solve_variant(classic, Rational(0)).player_safety;
  auto gap = [&](const Rational& alpha) {
    return solve_variant(classic, alpha).banker_safety - player;
  };
  AlphaStarBracket b{Rational(0), Rational(1, 16), 0};
  if (!(gap(b.lo) > 0) || !(gap(b.hi) < 0)) {
    throw std::logic_error("safety levels do not cross on [0, 1/16]");
  }
  while (b.hi - b.lo > tolerance) {
    const Rational mid = (b.lo + b.hi) / 2;
    const Rational g = gap(mid);
    if (g > 0) {
      b.lo = mid;
    } else if (g < 0) {
      b.hi = mid;
    } else {
      b.lo = b.hi = mid;  // unreachable for an irrational root
    }
    ++b.iterations;
  }
  return b;
}

long double alpha_star_closed_form() {
  return (34601239.0L - std::sqrt(1060031672799697.0L)) / 36711576.0L;
}

std::vector<Rational> crossover_points() {
  static const std::vector<Rational> points = [] {
    std::vector<Rational> out;
    for (const auto& info : BankerInfoSet::all()) {
      for (PlayerRow row : {PlayerRow::StandOn5, PlayerRow::DrawOn5}) {
        bool found = false;
        Rational root = improvement_root(info, row, &found);
        if (found) out.push_back(std::move(root));
      }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }();
  return points;
}

Rational table_validity_bound(const Variant& variant) {
  if (variant.kind() == VariantKind::Modern) {
    return first_change([&](const Rational& alpha) {
      const VariantSolution s = solve_variant(variant, alpha, DomainCheck::Skip);
      EquilibriumSignature sig;
      sig.unique = s.unique;
      for (const auto& e : s.equilibria) sig.profiles.emplace_back(e.row_strategy, e.column_strategy);
      return sig;
    });
  }
  return first_change([](const Rational& alpha) { return classify_info_sets(alpha); });
}

}  // namespace baccarat
