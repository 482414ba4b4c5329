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

#include <stdexcept>

namespace baccarat {
namespace {

constexpr int kRows = 2;

int row_index(PlayerRow row) { return row == PlayerRow::StandOn5 ? 0 : 1; }
int action_index(Action a) { return a == Action::Draw ? 0 : 1; }

void add_outcome(OutcomeMass& mass, int player_final, int banker_final, const Rational& w) {
  if (player_final > banker_final) {
    mass.player_win += w;
  } else if (banker_final > player_final) {
    mass.banker_win += w;
  } else {
    mass.tie += w;
  }
}

struct MassTable {
  OutcomeMass natural;
  // [row][info][action]
  std::array<std::array<std::array<OutcomeMass, 2>, BankerInfoSet::kCount>, kRows> cells;
};

MassTable compute_masses() {
  const auto& nu = value_distribution();
  const auto& tau = two_card_total_distribution();
  MassTable t;
  for (int pt = 0; pt < 10; ++pt) {
    for (int bt = 0; bt < 10; ++bt) {
      if (pt >= 8 || bt >= 8) add_outcome(t.natural, pt, bt, tau[pt] * tau[bt]);
    }
  }
  for (PlayerRow row : {PlayerRow::StandOn5, PlayerRow::DrawOn5}) {
    auto& cells = t.cells[row_index(row)];
    for (int pt = 0; pt < 8; ++pt) {
      const bool draws = mandated_player_action(HandTotal(pt), row) == Action::Draw;
      for (int bt = 0; bt < 8; ++bt) {
        const Rational w0 = tau[pt] * tau[bt];
        for (int c = 0; c < (draws ? 10 : 1); ++c) {
          const Rational w = draws ? Rational(w0 * nu[c]) : w0;
          const int player_final = draws ? (pt + c) % 10 : pt;
          const BankerInfoSet info(bt, draws ? std::optional<int>(c) : std::nullopt);
          auto& by_action = cells[info.index()];
          add_outcome(by_action[action_index(Action::Stand)], player_final, bt, w);
          for (int d = 0; d < 10; ++d) {
            add_outcome(by_action[action_index(Action::Draw)], player_final, (bt + d) % 10,
                        w * nu[d]);
          }
        }
      }
    }
  }
  return t;
}

const MassTable& masses() {
  static const MassTable table = compute_masses();
  return table;
}

// Banker's unconditional gain from drawing at `info` against `row`.
Rational unconditional_improvement(const BankerInfoSet& info, int row, const Rational& alpha) {
  const auto& m = masses().cells[row][info.index()];
  return m[action_index(Action::Draw)].banker_ev(alpha) -
         m[action_index(Action::Stand)].banker_ev(alpha);
}

std::vector<std::vector<Action>> all_assignments(std::size_t k) {
  std::vector<std::vector<Action>> out;
  const std::size_t n = std::size_t{1} << k;
  out.reserve(n);
  for (std::size_t bits = 0; bits < n; ++bits) {
    std::vector<Action> a(k);
    for (std::size_t i = 0; i < k; ++i) {
      a[i] = (bits >> (k - 1 - i)) & 1 ? Action::Draw : Action::Stand;
    }
    out.push_back(std::move(a));
  }
  return out;
}

}  // namespace

OutcomeMass& OutcomeMass::operator+=(const OutcomeMass& other) {
  player_win += other.player_win;
  banker_win += other.banker_win;
  tie += other.tie;
  return *this;
}

const std::array<Rational, 10>& value_distribution() {
  static const std::array<Rational, 10> nu = [] {
    std::array<Rational, 10> out;
    out[0] = Rational(4, 13);
    for (int v = 1; v < 10; ++v) out[v] = Rational(1, 13);
    return out;
  }();
  return nu;
}

const std::array<Rational, 10>& two_card_total_distribution() {
  static const std::array<Rational, 10> tau = [] {
    const auto& nu = value_distribution();
    std::array<Rational, 10> out;
    for (int a = 0; a < 10; ++a)
      for (int b = 0; b < 10; ++b) out[(a + b) % 10] += nu[a] * nu[b];
    return out;
  }();
  return tau;
}

const OutcomeMass& natural_outcome() { return masses().natural; }

const OutcomeMass& info_set_mass(const BankerInfoSet& info, PlayerRow row, Action action) {
  return masses().cells[row_index(row)][info.index()][action_index(action)];
}

InfoSetStats info_set_stats(const BankerInfoSet& info, PlayerRow row, const Rational& alpha) {
  check_commission(alpha);
  const OutcomeMass& draw = info_set_mass(info, row, Action::Draw);
  const OutcomeMass& stand = info_set_mass(info, row, Action::Stand);
  InfoSetStats s{info, row, alpha, stand.total(), 0, 0};
  // Every info set is reachable under both rows.
  s.e_draw = draw.banker_ev(alpha) / s.occurrence;
  s.e_stand = stand.banker_ev(alpha) / s.occurrence;
  return s;
}

Rational improvement_at_info_set(const BankerInfoSet& info, PlayerRow row,
                                 const Rational& alpha) {
  return info_set_stats(info, row, alpha).improvement();
}

std::vector<BankerInfoSet> Classification::starred() const {
  std::vector<BankerInfoSet> out;
  for (const auto& info : BankerInfoSet::all())
    if (at(info) == TableCell::Starred) out.push_back(info);
  return out;
}

bool Classification::matches_table() const {
  for (const auto& info : BankerInfoSet::all())
    if (at(info) != banker_table_action(info)) return false;
  return true;
}

Classification classify_info_sets(const Rational& alpha) {
  check_commission(alpha);
  Classification out;
  out.alpha = alpha;
  for (const auto& info : BankerInfoSet::all()) {
    const Rational stand_row = unconditional_improvement(info, 0, alpha);
    const Rational draw_row = unconditional_improvement(info, 1, alpha);
    if (stand_row > 0 && draw_row > 0) {
      out.cells[info.index()] = TableCell::Draw;
    } else if (stand_row < 0 && draw_row < 0) {
      out.cells[info.index()] = TableCell::Stand;
    } else {
      out.cells[info.index()] = TableCell::Starred;
    }
  }
  return out;
}

PayoffPair decomposed_payoff(PlayerRow row, const BankerStrategy& strategy,
                             const Rational& alpha) {
  check_commission(alpha);
  OutcomeMass total = natural_outcome();
  for (const auto& info : BankerInfoSet::all()) total += info_set_mass(info, row, strategy.at(info));
  return {total.player_ev(), total.banker_ev(alpha)};
}

ReducedGame build_reduced_game(const Variant& variant, const Rational& alpha, DomainCheck check) {
  check_commission(alpha);
  if (check == DomainCheck::Enforce) variant.check_alpha(alpha);

  ReducedGame game;
  game.alpha = alpha;
  game.row_labels = {"StandOn5", "DrawOn5"};
  game.optional_cells = variant.optional_cells();
  game.columns = all_assignments(game.optional_cells.size());
  for (const auto& c : game.columns) game.column_labels.push_back(column_label(c));

  const std::size_t n = game.columns.size();
  game.player_payoff = Matrix(kRows, n);
  game.banker_payoff = Matrix(kRows, n);
  for (PlayerRow row : {PlayerRow::StandOn5, PlayerRow::DrawOn5}) {
    const int r = row_index(row);
    OutcomeMass base = natural_outcome();
    for (const auto& info : BankerInfoSet::all()) {
      if (!variant.is_optional(info)) base += info_set_mass(info, row, variant.mandated_action(info));
    }
    for (std::size_t j = 0; j < n; ++j) {
      OutcomeMass total = base;
      for (std::size_t i = 0; i < game.optional_cells.size(); ++i) {
        total += info_set_mass(game.optional_cells[i], row, game.columns[j][i]);
      }
      game.player_payoff(r, j) = total.player_ev();
      game.banker_payoff(r, j) = total.banker_ev(alpha);
    }
  }
  return game;
}

BankerBestResponse banker_best_response(const MixedStrategy& player_mix, const Variant& variant,
                                        const Rational& alpha) {
  if (player_mix.size() != kRows) {
    throw std::invalid_argument("Player mixture must cover StandOn5 and DrawOn5");
  }
  check_commission(alpha);
  BankerBestResponse out;
  out.cells = variant.optional_cells();
  std::vector<Action> choice;
  for (const auto& info : out.cells) {
    Rational gain = 0;
    for (int r = 0; r < kRows; ++r) {
      if (player_mix[r] != 0) gain += player_mix[r] * unconditional_improvement(info, r, alpha);
    }
    if (gain > 0) {
      out.maximizers.push_back({Action::Draw});
    } else if (gain < 0) {
      out.maximizers.push_back({Action::Stand});
    } else {
      out.maximizers.push_back({Action::Draw, Action::Stand});
      out.unique = false;
    }
    choice.push_back(out.maximizers.back().front());
  }
  out.strategy = variant.strategy(choice);
  out.label = column_label(choice);
  for (int r = 0; r < kRows; ++r) {
    if (player_mix[r] == 0) continue;
    const PlayerRow row = r == 0 ? PlayerRow::StandOn5 : PlayerRow::DrawOn5;
    out.expected_payoff += player_mix[r] * decomposed_payoff(row, out.strategy, alpha).banker;
  }
  return out;
}

PlayerBestResponse player_best_response(const MixedStrategy& banker_mix, const Variant& variant,
                                        const Rational& alpha) {
  const ReducedGame game = build_reduced_game(variant, alpha, DomainCheck::Skip);
  if (banker_mix.size() != game.cols()) {
    throw std::invalid_argument("Banker mixture size does not match the variant's columns");
  }
  std::array<Rational, kRows> value;
  for (int r = 0; r < kRows; ++r) {
    value[r] = expected_payoff(game.player_payoff,
                               MixedStrategy::pure(kRows, static_cast<std::size_t>(r)),
                               banker_mix);
  }
  PlayerBestResponse out;
  const Rational best = value[0] > value[1] ? value[0] : value[1];
  if (value[0] == best) out.maximizers.push_back(PlayerRow::StandOn5);
  if (value[1] == best) out.maximizers.push_back(PlayerRow::DrawOn5);
  out.unique = out.maximizers.size() == 1;
  out.row = out.maximizers.back();
  out.expected_payoff = best;
  return out;
}

}  // namespace baccarat
