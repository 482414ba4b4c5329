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

#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "baccarat/montecarlo.hpp"
#include "baccarat/oracle.hpp"
#include "baccarat/parametric.hpp"
#include "baccarat/payoff.hpp"
#include "baccarat/punto.hpp"
#include "baccarat/solver.hpp"
#include "report.hpp"

namespace baccarat::cli {
namespace {

struct Options {
  std::string format = "text";
  std::string out_file;
  std::string alpha;
  std::string variant;
  std::string tol = "1e-9";
  std::string grid;
  std::string player_p;
  std::string banker;
  std::uint64_t hands = 0;
  std::uint64_t seed = 0;
  unsigned threads = 0;
};

std::string echo(const std::vector<std::string>& args) {
  std::string out = "baccarat";
  for (const auto& a : args) out += " " + a;
  return out;
}

Rational alpha_or(const std::string& text, const Rational& fallback) {
  return text.empty() ? fallback : parse_rational(text);
}

Rational default_alpha(const Variant& v) {
  return v.kind() == VariantKind::Parlor ? Rational(0) : Rational(1, 20);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, sep)) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

Report table_report(const Options& o) {
  const Rational alpha = alpha_or(o.alpha, Rational(0));
  const Classification c = classify_info_sets(alpha);
  Report r;
  r.inputs.emplace_back("alpha", to_fraction_string(alpha));
  std::ostringstream grid;
  grid << "Banker  Player's third card (- if Player stands)\n";
  grid << "total   0 1 2 3 4 5 6 7 8 9 -\n";
  for (int total = 0; total < 8; ++total) {
    std::vector<std::string> cells;
    grid << "  " << total << "    ";
    for (int col = 0; col < BankerInfoSet::kColumns; ++col) {
      const auto info = BankerInfoSet::from_index(total * BankerInfoSet::kColumns + col);
      cells.emplace_back(1, to_char(c.at(info)));
      grid << " " << cells.back();
    }
    grid << "\n";
    r.add("row_" + std::to_string(total), cells);
  }
  r.text_block = grid.str();
  std::vector<std::string> starred;
  for (const auto& info : c.starred()) starred.push_back(info.to_string());
  r.add("starred", starred);
  r.add("matches_reference_table", c.matches_table());
  return r;
}

void add_solution(Report& r, const VariantSolution& s) {
  const EquilibriumReport& e = s.equilibrium();
  r.add("p", s.draw_on_5_probability());
  for (const auto& info : s.full.optional_cells) {
    const Rational d = banker_draw_probability(s.full, e.column_strategy, info);
    if (info == BankerInfoSet(6, std::nullopt)) r.add("q", d);
    r.add("banker_draw" + info.to_string(), d);
  }
  for (std::size_t j : e.column_support) {
    r.add("banker_mix[" + s.full.column_labels[j] + "]", e.column_strategy[j]);
  }
  r.add("v_player", e.row_value);
  r.add("v_banker", e.column_value);
  r.add("player_safety", s.player_safety);
  r.add("banker_safety", s.banker_safety);
  r.add("kind", std::string(e.kind == EquilibriumKind::Pure ? "pure" : "mixed"));
  r.add("unique", s.unique);
  r.add("equilibria", static_cast<std::int64_t>(s.equilibria.size()));
  r.add("nondegenerate", s.nondegenerate);
  r.add("reduced_columns", s.reduced.game.column_labels);
  r.add("reduced_rows", s.reduced.game.row_labels);
}

Report solve_report(const Options& o) {
  const Variant v = Variant::from_name(o.variant);
  const Rational alpha = alpha_or(o.alpha, default_alpha(v));
  Report r;
  r.inputs.emplace_back("variant", v.name());
  r.inputs.emplace_back("alpha", to_fraction_string(alpha));
  add_solution(r, solve_variant(v, alpha));
  return r;
}

Report alpha_star_report(const Options& o) {
  const Rational tol = parse_rational(o.tol);
  const AlphaStarBracket b = find_alpha_star(tol);
  Report r;
  r.inputs.emplace_back("tol", to_fraction_string(tol));
  r.add("lo", b.lo);
  r.add("hi", b.hi);
  r.add("width", Rational(b.hi - b.lo));
  r.add("midpoint", Rational((b.lo + b.hi) / 2));
  r.add("closed_form", static_cast<double>(alpha_star_closed_form()));
  r.add("iterations", static_cast<std::int64_t>(b.iterations));
  return r;
}

Report punto_report(const Options&) {
  const PuntoReport p = punto_edges();
  Report r;
  r.add("P", p.player_win);
  r.add("B", p.banker_win);
  r.add("T", p.tie);
  r.add("edge_player", p.edge_player);
  r.add("edge_banker", p.edge_banker);
  r.add("edge_chemin", p.edge_chemin);
  r.add("edge_sum_identity", p.edge_player + p.edge_banker == p.edge_chemin);
  return r;
}

Report sweep_report(const Options& o) {
  const Variant v = Variant::from_name(o.variant.empty() ? "classic" : o.variant);
  std::vector<Rational> grid;
  for (const auto& item : split(o.grid, ',')) grid.push_back(parse_rational(item));
  if (grid.empty()) throw std::invalid_argument("--grid needs at least one commission");
  const CommissionSweep sweep = equilibrium_curve(v, grid);
  Report r;
  r.inputs.emplace_back("variant", v.name());
  r.inputs.emplace_back("grid", o.grid);
  r.add("validity_bound", sweep.validity_bound);
  for (const auto& s : sweep.samples) {
    const std::string at = "@" + to_fraction_string(s.alpha);
    r.add("p" + at, s.solution.draw_on_5_probability());
    r.add("v_player" + at, s.solution.equilibrium().row_value);
    r.add("v_banker" + at, s.solution.equilibrium().column_value);
    r.add("unique" + at, s.solution.unique);
    if (s.matches_closed_form) r.add("closed_form" + at, *s.matches_closed_form);
  }
  return r;
}

Report simulate_report(const Options& o) {
  const Variant v = Variant::from_name(o.variant);
  const Rational alpha = alpha_or(o.alpha, default_alpha(v));
  const VariantSolution s = solve_variant(v, alpha);
  const EquilibriumReport& e = s.equilibrium();

  SimConfig config;
  config.variant = v;
  config.alpha = alpha;
  config.n_hands = o.hands;
  config.seed = o.seed;
  config.threads = o.threads;
  config.player_draw_on_5 = o.player_p.empty() ? s.draw_on_5_probability() : parse_rational(o.player_p);
  MixedStrategy banker_mix = e.column_strategy;
  if (!o.banker.empty()) {
    banker_mix = MixedStrategy::pure(s.full.cols(), s.full.column_index(o.banker));
  }
  config.banker = BankerBehavior::from_mixture(v, s.full, banker_mix);
  const SimResult sim = simulate(config);

  const MixedStrategy rows = MixedStrategy::two_point(config.player_draw_on_5);
  const Rational exact_player = expected_payoff(s.full.player_payoff, rows, banker_mix);
  const Rational exact_banker = expected_payoff(s.full.banker_payoff, rows, banker_mix);

  Report r;
  r.inputs.emplace_back("variant", v.name());
  r.inputs.emplace_back("alpha", to_fraction_string(alpha));
  r.inputs.emplace_back("hands", std::to_string(o.hands));
  r.inputs.emplace_back("seed", std::to_string(o.seed));
  r.inputs.emplace_back("player_p", to_fraction_string(config.player_draw_on_5));
  r.add("generator", sim.generator);
  r.add("n_hands", static_cast<std::int64_t>(sim.n_hands));
  r.add("player_wins", static_cast<std::int64_t>(sim.player_wins));
  r.add("banker_wins", static_cast<std::int64_t>(sim.banker_wins));
  r.add("ties", static_cast<std::int64_t>(sim.ties));
  r.add("mean_player", sim.mean_player);
  r.add("std_error_player", sim.std_error_player);
  r.add("exact_player", exact_player);
  r.add("mean_banker", sim.mean_banker);
  r.add("std_error_banker", sim.std_error_banker);
  r.add("exact_banker", exact_banker);
  r.add("mean_casino", sim.mean_casino);
  if (sim.std_error_player > 0) {
    r.add("z_player", (sim.mean_player - to_double(exact_player)) / sim.std_error_player);
  }
  if (sim.std_error_banker > 0) {
    r.add("z_banker", (sim.mean_banker - to_double(exact_banker)) / sim.std_error_banker);
  }
  return r;
}

Report oracle_report(const Options& o) {
  const Variant v = Variant::from_name(o.variant);
  const Rational alpha = alpha_or(o.alpha, default_alpha(v));
  const ReducedGame g = build_reduced_game(v, alpha);
  Report r;
  r.inputs.emplace_back("variant", v.name());
  r.inputs.emplace_back("alpha", to_fraction_string(alpha));
  std::int64_t mismatches = 0;
  for (std::size_t row = 0; row < 2; ++row) {
    const PlayerRow pr = row == 0 ? PlayerRow::StandOn5 : PlayerRow::DrawOn5;
    for (std::size_t j = 0; j < g.cols(); ++j) {
      const PayoffPair brute = oracle_payoff_entry(pr, v.strategy(g.columns[j]), alpha);
      const std::string at = "[" + g.row_labels[row] + "][" + g.column_labels[j] + "]";
      r.add("A" + at, g.player_payoff(row, j));
      r.add("B" + at, g.banker_payoff(row, j));
      if (brute.player != g.player_payoff(row, j) || brute.banker != g.banker_payoff(row, j)) {
        ++mismatches;
        r.add("oracle_A" + at, brute.player);
        r.add("oracle_B" + at, brute.banker);
      }
    }
  }
  r.add("entries", static_cast<std::int64_t>(2 * g.cols()));
  r.add("mismatches", mismatches);
  r.add("oracle_agrees", mismatches == 0);
  return r;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact equilibrium analysis of baccarat chemin de fer and punto banco",
               "baccarat"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--out", o.out_file, "Also write the report to FILE");

  auto* table = app.add_subcommand("table", "Banker decision table at a commission");
  table->add_option("--alpha", o.alpha, "Commission, e.g. 0.05 or 1/20");

  auto* solve = app.add_subcommand("solve", "Solve the parlor, classic or modern game");
  solve->add_option("variant", o.variant, "parlor | classic | modern | crockford")->required();
  solve->add_option("--alpha", o.alpha, "Commission");

  auto* star = app.add_subcommand("alpha-star", "Bracket the break-even commission");
  star->add_option("--tol", o.tol, "Bracket width");

  auto* punto = app.add_subcommand("punto", "Punto banco probabilities and house edges");

  auto* sweep = app.add_subcommand("sweep", "Equilibrium across commissions");
  sweep->add_option("--grid", o.grid, "Comma-separated commissions")->required();
  sweep->add_option("--variant", o.variant, "Variant (default classic)");

  auto* sim = app.add_subcommand("simulate", "Monte Carlo run of an equilibrium profile");
  sim->add_option("--variant", o.variant, "Variant")->required();
  sim->add_option("--hands", o.hands, "Number of coups")->required();
  sim->add_option("--seed", o.seed, "Seed")->required();
  sim->add_option("--alpha", o.alpha, "Commission");
  sim->add_option("--player-p", o.player_p, "Player draw-on-5 probability");
  sim->add_option("--banker", o.banker, "Banker column, e.g. DSDS (default: equilibrium mix)");
  sim->add_option("--threads", o.threads, "Worker threads (0 = all cores)");

  auto* oracle = app.add_subcommand("oracle", "Brute-force check of the payoff matrices");
  oracle->add_option("--variant", o.variant, "Variant")->required();
  oracle->add_option("--alpha", o.alpha, "Commission");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  try {
    Report report;
    if (*table) report = table_report(o);
    else if (*solve) report = solve_report(o);
    else if (*star) report = alpha_star_report(o);
    else if (*punto) report = punto_report(o);
    else if (*sweep) report = sweep_report(o);
    else if (*sim) report = simulate_report(o);
    else if (*oracle) report = oracle_report(o);
    report.command = echo(args);

    std::ostringstream rendered;
    render(report, parse_format(o.format), rendered);
    out << rendered.str();
    if (!o.out_file.empty()) {
      std::ofstream file(o.out_file, std::ios::binary);
      if (!file) throw std::runtime_error("cannot write " + o.out_file);
      file << rendered.str();
    }
    return kExitOk;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}

}  // namespace baccarat::cli
