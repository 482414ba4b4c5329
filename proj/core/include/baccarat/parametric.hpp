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

#ifndef BACCARAT_PARAMETRIC_HPP_
#define BACCARAT_PARAMETRIC_HPP_

#include <optional>
#include <span>
#include <vector>

#include "baccarat/game.hpp"
#include "baccarat/payoff.hpp"
#include "baccarat/rational.hpp"
#include "baccarat/rules.hpp"
#include "baccarat/solver.hpp"

namespace baccarat {

// Closed forms for the Classic game on [0, 1/15).
Rational classic_draw_probability(const Rational& alpha);  // (9 - a) / (11 - 6a)
Rational classic_banker_draw_weight();                      // 859/2288 at (6,-)
Rational classic_banker_value(const Rational& alpha);
Rational parlor_value();                                    // -679568 / (11 * 13^6)
Rational modern_player_value();                             // -3705 * 16 / 13^6
Rational modern_banker_value(const Rational& alpha);        // 8 (7410 - 276593 a) / 13^6

// Probability that a Banker column mixture draws at `info`.
Rational banker_draw_probability(const ReducedGame& game, const MixedStrategy& columns,
                                 const BankerInfoSet& info);

// A variant solved at one commission. Strategies in `equilibria` are over
// the rows and columns of `full`; `reduced` shows what dominance removed.
struct VariantSolution {
  Variant variant;
  ReducedGame full;
  EliminationResult reduced;
  std::vector<EquilibriumReport> equilibria;
  bool complete = false;
  bool nondegenerate = false;
  bool unique = false;
  Rational player_safety;
  Rational banker_safety;

  const EquilibriumReport& equilibrium() const { return equilibria.front(); }
  // Player's probability of drawing on 5.
  Rational draw_on_5_probability() const;
};

VariantSolution solve_variant(const Variant& variant, const Rational& alpha,
                              DomainCheck check = DomainCheck::Enforce);

struct SweepSample {
  Rational alpha;
  VariantSolution solution;
  // Classic and Parlor only: p, q and Banker value equal the closed forms.
  std::optional<bool> matches_closed_form;
};

struct CommissionSweep {
  std::vector<SweepSample> samples;
  Rational validity_bound;
};

CommissionSweep equilibrium_curve(const Variant& variant, std::span<const Rational> alpha_grid);

// Bracket [lo, hi] around the commission where Banker's safety level in the
// Classic game falls to Player's. v_B(lo) > v_P > v_B(hi), hi - lo <= tol.
struct AlphaStarBracket {
  Rational lo;
  Rational hi;
  int iterations = 0;
  double midpoint() const;
};

AlphaStarBracket find_alpha_star(const Rational& tolerance);
// (34601239 - sqrt(1060031672799697)) / 36711576 in long double.
long double alpha_star_closed_form();

// Commissions in (0, 1) where some info set's draw-minus-stand gain, for
// some Player row, changes sign. Sorted, distinct.
std::vector<Rational> crossover_points();

// Supremum of the commissions, starting from 0, over which the variant's
// structure stays as at alpha = 0: the info-set classification for
// Classic/Parlor/Custom, the equilibrium set for Modern.
Rational table_validity_bound(const Variant& variant);

}  // namespace baccarat

#endif  // BACCARAT_PARAMETRIC_HPP_
