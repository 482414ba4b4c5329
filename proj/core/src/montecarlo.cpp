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

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>
#include <thread>
#include <vector>

namespace baccarat {
namespace {

using Engine = std::mt19937_64;

struct Tally {
  std::uint64_t player_wins = 0;
  std::uint64_t banker_wins = 0;
  std::uint64_t ties = 0;
};

// u < threshold happens with probability p for u uniform on 64 bits.
// p == 1 is flagged separately.
struct Threshold {
  std::uint64_t value = 0;
  bool always = false;

  explicit Threshold(const Rational& p) {
    if (p >= 1) {
      always = true;
      return;
    }
    const Integer scaled = numerator(p) * (Integer(1) << 64) / denominator(p);
    value = scaled.convert_to<std::uint64_t>();
  }
  bool sample(Engine& eng) const { return always || eng() < value; }
};

// Rank 0..12 without modulo bias; ranks 9..12 are the ten and court cards.
CardValue draw_card(Engine& eng) {
  constexpr std::uint64_t kLimit =
      std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % 13;
  std::uint64_t r;
  do {
    r = eng();
  } while (r >= kLimit);
  const int rank = static_cast<int>(r % 13);
  return CardValue(rank < 9 ? rank + 1 : 0);
}

Engine batch_engine(std::uint64_t seed, std::uint64_t batch) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(batch), static_cast<std::uint32_t>(batch >> 32)};
  return Engine(seq);
}

Tally run_batch(const SimConfig& config, const Threshold& player,
                const std::vector<Threshold>& banker, std::uint64_t batch, std::uint64_t hands) {
  Engine eng = batch_engine(config.seed, batch);
  Tally t;
  const auto decide = [&](const BankerInfoSet& info) {
    return banker[static_cast<std::size_t>(info.index())].sample(eng) ? Action::Draw
                                                                      : Action::Stand;
  };
  for (std::uint64_t h = 0; h < hands; ++h) {
    const std::array<CardValue, 2> p = {draw_card(eng), draw_card(eng)};
    const std::array<CardValue, 2> b = {draw_card(eng), draw_card(eng)};
    const DrawCards draws{draw_card(eng), draw_card(eng)};
    const PlayerRow row = player.sample(eng) ? PlayerRow::DrawOn5 : PlayerRow::StandOn5;
    switch (resolve_coup(p, b, draws, row, decide).winner) {
      case Winner::Player: ++t.player_wins; break;
      case Winner::Banker: ++t.banker_wins; break;
      case Winner::Tie: ++t.ties; break;
    }
  }
  return t;
}

void validate(const SimConfig& config) {
  if (config.n_hands < 1) throw std::invalid_argument("simulation needs at least one hand");
  check_commission(config.alpha);
  if (config.player_draw_on_5 < 0 || config.player_draw_on_5 > 1) {
    throw std::invalid_argument("Player draw-on-5 probability outside [0, 1]");
  }
  for (const auto& info : BankerInfoSet::all()) {
    const Rational& p = config.banker.draw_probability(info);
    if (p < 0 || p > 1) {
      throw std::invalid_argument("Banker draw probability outside [0, 1] at " + info.to_string());
    }
    if (!config.variant.is_optional(info)) {
      const Rational want = config.variant.mandated_action(info) == Action::Draw ? 1 : 0;
      if (p != want) {
        throw std::invalid_argument("Banker behaviour violates the mandated move at " +
                                    info.to_string() + " for " + config.variant.name());
      }
    }
  }
}

}  // namespace

BankerBehavior::BankerBehavior() { draw_.fill(Rational(0)); }

BankerBehavior BankerBehavior::pure(const BankerStrategy& strategy) {
  BankerBehavior b;
  for (const auto& info : BankerInfoSet::all())
    b.draw_[info.index()] = strategy.at(info) == Action::Draw ? 1 : 0;
  return b;
}

BankerBehavior BankerBehavior::from_mixture(const Variant& variant, const ReducedGame& game,
                                            const MixedStrategy& columns) {
  if (columns.size() != game.columns.size()) {
    throw std::invalid_argument("column mixture does not match the game");
  }
  BankerBehavior b;
  for (const auto& info : BankerInfoSet::all()) {
    if (!variant.is_optional(info)) {
      b.draw_[info.index()] = variant.mandated_action(info) == Action::Draw ? 1 : 0;
    }
  }
  for (std::size_t i = 0; i < game.optional_cells.size(); ++i) {
    Rational p = 0;
    for (std::size_t j = 0; j < game.columns.size(); ++j)
      if (game.columns[j][i] == Action::Draw) p += columns[j];
    b.draw_[game.optional_cells[i].index()] = p;
  }
  return b;
}

void BankerBehavior::set_draw_probability(const BankerInfoSet& info, Rational p) {
  if (p < 0 || p > 1) throw std::invalid_argument("draw probability outside [0, 1]");
  draw_[info.index()] = std::move(p);
}

SimResult simulate(const SimConfig& config) {
  validate(config);
  const Threshold player(config.player_draw_on_5);
  std::vector<Threshold> banker;
  banker.reserve(BankerInfoSet::kCount);
  for (const auto& info : BankerInfoSet::all()) banker.emplace_back(config.banker.draw_probability(info));

  const std::uint64_t batches = (config.n_hands + kSimBatchSize - 1) / kSimBatchSize;
  std::vector<Tally> tallies(batches);
  const auto hands_in = [&](std::uint64_t b) {
    return b + 1 < batches ? kSimBatchSize : config.n_hands - b * kSimBatchSize;
  };
  unsigned workers = config.threads ? config.threads : std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, batches));
  if (workers <= 1) {
    for (std::uint64_t b = 0; b < batches; ++b) tallies[b] = run_batch(config, player, banker, b, hands_in(b));
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (std::uint64_t b = w; b < batches; b += workers)
          tallies[b] = run_batch(config, player, banker, b, hands_in(b));
      });
    }
    for (auto& t : pool) t.join();
  }

  SimResult r;
  r.n_hands = config.n_hands;
  r.seed = config.seed;
  r.generator = "mt19937_64 seed_seq{seed,batch} batch=" + std::to_string(kSimBatchSize);
  for (const Tally& t : tallies) {
    r.player_wins += t.player_wins;
    r.banker_wins += t.banker_wins;
    r.ties += t.ties;
  }
  const double n = static_cast<double>(r.n_hands);
  const double w = static_cast<double>(r.player_wins);
  const double l = static_cast<double>(r.banker_wins);
  const double a = to_double(config.alpha);
  r.mean_player = (w - l) / n;
  r.mean_banker = ((1 - a) * l - w) / n;
  r.mean_casino = a * l / n;
  if (r.n_hands > 1) {
    const double correction = n / (n - 1);
    const double var_p = correction * ((w + l) / n - r.mean_player * r.mean_player);
    const double var_b = correction * (((1 - a) * (1 - a) * l + w) / n - r.mean_banker * r.mean_banker);
    r.std_error_player = std::sqrt(std::max(0.0, var_p) / n);
    r.std_error_banker = std::sqrt(std::max(0.0, var_b) / n);
  }
  return r;
}

}  // namespace baccarat
