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

#include <algorithm>
#include <cctype>
#include <utility>

namespace baccarat {
namespace {

// Rows are Banker totals 0..7, columns Player third card 0..9 then "stood".
constexpr std::array<std::string_view, 8> kTable = {
    "DDDDDDDDDDD",  // 0
    "DDDDDDDDDDD",  // 1
    "DDDDDDDDDDD",  // 2
    "DDDDDDDDS*D",  // 3
    "S*DDDDDDSSD",  // 4
    "SSSS*DDDSSD",  // 5
    "SSSSSSDDSS*",  // 6
    "SSSSSSSSSSS",  // 7
};

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

}  // namespace

std::string_view to_string(PlayerRow row) {
  return row == PlayerRow::StandOn5 ? "StandOn5" : "DrawOn5";
}

std::string_view to_string(Action action) {
  return action == Action::Draw ? "Draw" : "Stand";
}

char to_char(Action action) { return action == Action::Draw ? 'D' : 'S'; }

char to_char(TableCell cell) {
  switch (cell) {
    case TableCell::Draw: return 'D';
    case TableCell::Stand: return 'S';
    case TableCell::Starred: return '*';
  }
  return '?';
}

BankerInfoSet::BankerInfoSet(int banker_total, std::optional<int> player_card) {
  if (banker_total < 0 || banker_total > 7) {
    throw std::invalid_argument("Banker info set total must be 0..7");
  }
  if (player_card && (*player_card < 0 || *player_card > 9)) {
    throw std::invalid_argument("Player third card must be 0..9");
  }
  banker_total_ = banker_total;
  player_card_ = player_card.value_or(kStood);
}

BankerInfoSet BankerInfoSet::from_index(int index) {
  if (index < 0 || index >= kCount) {
    throw std::invalid_argument("info set index out of range");
  }
  BankerInfoSet info;
  info.banker_total_ = index / kColumns;
  info.player_card_ = index % kColumns;
  return info;
}

const std::array<BankerInfoSet, BankerInfoSet::kCount>& BankerInfoSet::all() {
  static const auto sets = []<std::size_t... I>(std::index_sequence<I...>) {
    return std::array<BankerInfoSet, kCount>{from_index(static_cast<int>(I))...};
  }(std::make_index_sequence<kCount>{});
  return sets;
}

std::string BankerInfoSet::to_string() const {
  std::string out = "(" + std::to_string(banker_total_) + ",";
  out += player_stood() ? std::string("-") : std::to_string(player_card_);
  out += ")";
  return out;
}

BankerInfoSet BankerInfoSet::parse(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (c != '(' && c != ')' && !std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  const auto comma = s.find(',');
  if (comma == std::string::npos || comma == 0) {
    throw std::invalid_argument("info set must look like (3,9) or (6,-)");
  }
  const std::string total = s.substr(0, comma);
  const std::string card = lower(s.substr(comma + 1));
  if (total.size() != 1 || !std::isdigit(static_cast<unsigned char>(total[0]))) {
    throw std::invalid_argument("bad Banker total in info set '" + std::string(text) + "'");
  }
  std::optional<int> player_card;
  if (card == "-" || card == "x" || card == "none" || card == "stand") {
    player_card = std::nullopt;
  } else if (card.size() == 1 && std::isdigit(static_cast<unsigned char>(card[0]))) {
    player_card = card[0] - '0';
  } else {
    throw std::invalid_argument("bad Player card in info set '" + std::string(text) + "'");
  }
  return BankerInfoSet(total[0] - '0', player_card);
}

HandTotal hand_total(std::span<const CardValue> cards) {
  if (cards.size() != 2 && cards.size() != 3) {
    throw std::invalid_argument("a hand holds two or three cards");
  }
  int sum = 0;
  for (CardValue c : cards) sum += c.value();
  return HandTotal(sum % 10);
}

TableCell banker_table_action(const BankerInfoSet& info) {
  const char c = kTable[info.banker_total()][info.index() % BankerInfoSet::kColumns];
  return c == 'D' ? TableCell::Draw : c == 'S' ? TableCell::Stand : TableCell::Starred;
}

const std::array<BankerInfoSet, 4>& starred_cells() {
  static const std::array<BankerInfoSet, 4> cells = {
      BankerInfoSet(3, 9), BankerInfoSet(4, 1), BankerInfoSet(5, 4),
      BankerInfoSet(6, std::nullopt)};
  return cells;
}

Action mandated_player_action(HandTotal total, PlayerRow row) {
  if (total.is_natural()) {
    throw std::invalid_argument("Player has a natural; no drawing decision");
  }
  if (total.value() <= 4) return Action::Draw;
  if (total.value() >= 6) return Action::Stand;
  return row == PlayerRow::DrawOn5 ? Action::Draw : Action::Stand;
}

BankerStrategy BankerStrategy::from_table(std::span<const Action, 4> starred) {
  std::array<Action, BankerInfoSet::kCount> moves{};
  for (const auto& info : BankerInfoSet::all()) {
    const TableCell cell = banker_table_action(info);
    moves[info.index()] = cell == TableCell::Draw ? Action::Draw : Action::Stand;
  }
  const auto& cells = starred_cells();
  for (std::size_t i = 0; i < cells.size(); ++i) moves[cells[i].index()] = starred[i];
  return BankerStrategy(moves);
}

Variant::Variant(VariantKind kind, std::vector<BankerInfoSet> optional)
    : kind_(kind), optional_(std::move(optional)) {
  std::sort(optional_.begin(), optional_.end());
  if (std::adjacent_find(optional_.begin(), optional_.end()) != optional_.end()) {
    throw std::invalid_argument("duplicate optional info set");
  }
}

Variant Variant::parlor() {
  const auto& s = starred_cells();
  return Variant(VariantKind::Parlor, {s.begin(), s.end()});
}

Variant Variant::classic() {
  const auto& s = starred_cells();
  return Variant(VariantKind::Classic, {s.begin(), s.end()});
}

Variant Variant::modern() {
  return Variant(VariantKind::Modern, {BankerInfoSet(3, 9), BankerInfoSet(5, 4)});
}

Variant Variant::custom(std::vector<BankerInfoSet> optional_cells) {
  return Variant(VariantKind::Custom, std::move(optional_cells));
}

Variant Variant::from_name(std::string_view name) {
  const std::string n = lower(name);
  if (n == "parlor") return parlor();
  if (n == "classic") return classic();
  if (n == "modern") return modern();
  if (n == "crockford") {
    return custom({BankerInfoSet(3, 9), BankerInfoSet(5, 4), BankerInfoSet(6, std::nullopt)});
  }
  throw std::invalid_argument("unknown variant '" + std::string(name) +
                              "' (expected parlor, classic, modern or crockford)");
}

std::string Variant::name() const {
  switch (kind_) {
    case VariantKind::Parlor: return "parlor";
    case VariantKind::Classic: return "classic";
    case VariantKind::Modern: return "modern";
    case VariantKind::Custom: break;
  }
  std::string out = "custom{";
  for (std::size_t i = 0; i < optional_.size(); ++i) {
    if (i) out += ",";
    out += optional_[i].to_string();
  }
  return out + "}";
}

bool Variant::is_optional(const BankerInfoSet& info) const {
  return std::binary_search(optional_.begin(), optional_.end(), info);
}

Action Variant::mandated_action(const BankerInfoSet& info) const {
  if (is_optional(info)) {
    throw std::invalid_argument("info set " + info.to_string() + " is optional in " + name());
  }
  return banker_table_action(info) == TableCell::Draw ? Action::Draw : Action::Stand;
}

Rational Variant::alpha_limit() const {
  return kind_ == VariantKind::Modern ? Rational(2, 5) : Rational(1, 15);
}

void Variant::check_alpha(const Rational& alpha) const {
  if (alpha < 0 || alpha >= alpha_limit()) {
    throw std::domain_error("commission " + to_fraction_string(alpha) + " outside [0, " +
                            to_fraction_string(alpha_limit()) + ") for " + name());
  }
}

BankerStrategy Variant::strategy(std::span<const Action> assignment) const {
  if (assignment.size() != optional_.size()) {
    throw std::invalid_argument("assignment size does not match the optional cells of " +
                                name());
  }
  std::array<Action, BankerInfoSet::kCount> moves{};
  for (const auto& info : BankerInfoSet::all()) {
    if (!is_optional(info)) moves[info.index()] = mandated_action(info);
  }
  for (std::size_t i = 0; i < optional_.size(); ++i) {
    moves[optional_[i].index()] = assignment[i];
  }
  return BankerStrategy(moves);
}

BankerStrategy Variant::strategy(std::string_view code) const {
  std::vector<Action> assignment;
  for (char c : code) {
    if (c == 'D' || c == 'd') {
      assignment.push_back(Action::Draw);
    } else if (c == 'S' || c == 's') {
      assignment.push_back(Action::Stand);
    } else {
      throw std::invalid_argument("strategy code may contain only D and S");
    }
  }
  return strategy(assignment);
}

void Variant::validate(const BankerStrategy& strategy) const {
  for (const auto& info : BankerInfoSet::all()) {
    if (is_optional(info)) continue;
    if (strategy.at(info) != mandated_action(info)) {
      throw std::invalid_argument("strategy violates the mandated move at " +
                                  info.to_string() + " for " + name());
    }
  }
}

void check_commission(const Rational& alpha) {
  if (alpha < 0 || alpha >= 1) {
    throw std::domain_error("commission must lie in [0, 1)");
  }
}

Settlement settle(Winner winner, const Rational& alpha) {
  check_commission(alpha);
  switch (winner) {
    case Winner::Player: return {Rational(1), Rational(-1), Rational(0)};
    case Winner::Banker: return {Rational(-1), Rational(1 - alpha), alpha};
    case Winner::Tie: break;
  }
  return {Rational(0), Rational(0), Rational(0)};
}

CoupOutcome play_coup(std::span<const CardValue, 2> player,
                      std::span<const CardValue, 2> banker,
                      const DrawCards& draws, PlayerRow row,
                      const BankerStrategy& strategy, const Rational& alpha) {
  check_commission(alpha);
  CoupOutcome out;
  out.resolution = resolve_coup(player, banker, draws, row,
                                [&](const BankerInfoSet& info) { return strategy.at(info); });
  Settlement s = settle(out.resolution.winner, alpha);
  out.player_payoff = std::move(s.player);
  out.banker_payoff = std::move(s.banker);
  out.casino_take = std::move(s.casino);
  return out;
}

}  // namespace baccarat
