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

#ifndef BACCARAT_MONTECARLO_HPP_
#define BACCARAT_MONTECARLO_HPP_

#include <array>
#include <cstdint>
#include <string>

#include "baccarat/game.hpp"
#include "baccarat/rational.hpp"
#include "baccarat/rules.hpp"

namespace baccarat {

// Draw probability at each info set. A mixture over pure Banker strategies
// reaches a single info set per coup, so its behaviour form gives the same
// coup distribution.
class BankerBehavior {
 public:
  BankerBehavior();  // stands everywhere
  static BankerBehavior pure(const BankerStrategy& strategy);
  // `columns` is a mixture over the columns of `game`, built for `variant`.
  static BankerBehavior from_mixture(const Variant& variant, const ReducedGame& game,
                                     const MixedStrategy& columns);

  const Rational& draw_probability(const BankerInfoSet& info) const {
    return draw_[info.index()];
  }
  void set_draw_probability(const BankerInfoSet& info, Rational p);

 private:
  std::array<Rational, BankerInfoSet::kCount> draw_;
};

struct SimConfig {
  Variant variant = Variant::classic();
  Rational player_draw_on_5 = 1;
  BankerBehavior banker;
  Rational alpha = 0;
  std::uint64_t n_hands = 0;
  std::uint64_t seed = 0;
  // Worker threads; 0 picks the hardware concurrency. Results do not depend
  // on it.
  unsigned threads = 0;
};

struct SimResult {
  std::uint64_t n_hands = 0;
  std::uint64_t seed = 0;
  std::string generator;
  std::uint64_t player_wins = 0;
  std::uint64_t banker_wins = 0;
  std::uint64_t ties = 0;
  double mean_player = 0;
  double mean_banker = 0;
  double mean_casino = 0;
  double std_error_player = 0;
  double std_error_banker = 0;

  friend bool operator==(const SimResult&, const SimResult&) = default;
};

// Hands are split into fixed-size batches; batch i draws from mt19937_64
// seeded with seed_seq{seed, i}.
inline constexpr std::uint64_t kSimBatchSize = 1 << 16;

SimResult simulate(const SimConfig& config);

}  // namespace baccarat

#endif  // BACCARAT_MONTECARLO_HPP_
