// Copyright 2026 The netgame Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "netgame/app/analysis.hpp"

#include <algorithm>
#include <cstdio>
#include <future>
#include <iomanip>
#include <sstream>

#include "netgame/errors.hpp"

namespace netgame::app {

using netgame::to_string;
namespace {

std::string with_decimal(const Number& value) {
  if (is_integer(value)) return to_string(value);
  char buffer[48];
  std::snprintf(buffer, sizeof buffer, "%.6g", to_double(value));
  return to_string(value) + " (~" + buffer + ")";
}

std::string vector_string(const std::vector<Number>& values) {
  std::string out = "(";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ",";
    out += to_string(values[i]);
  }
  return out + ")";
}

std::string csv_quote(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string fraction_string(std::uint64_t count, std::uint64_t total) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.6f",
                static_cast<double>(count) / static_cast<double>(total));
  return buffer;
}

std::string header(const Scenario& scenario, const StrategicGame& game) {
  std::ostringstream out;
  out << "scenario: " << scenario.name << " (" << to_string(scenario.kind) << ")\n";
  out << "game: " << game.name() << "\n";
  if (scenario.schedule) {
    out << "schedule: f=" << vector_string(scenario.schedule->f)
        << " g=" << vector_string(scenario.schedule->g) << " ["
        << validate_schedule(*scenario.schedule).Summary() << "]\n";
  }
  if (scenario.adoption) {
    out << "beta=" << vector_string(scenario.adoption->beta)
        << " gamma=" << vector_string(scenario.adoption->gamma) << "\n";
  }
  if (scenario.insurance) {
    out << "epsilon=" << vector_string(scenario.insurance->epsilon)
        << " delta=" << vector_string(scenario.insurance->delta) << "\n";
  }
  if (scenario.graph) {
    out << "graph: " << scenario.graph_file << " (" << scenario.graph->num_nodes() << " nodes, "
        << scenario.graph->edges().size() << " edges), exponent " << to_string(scenario.exponent)
        << "\n";
  }
  return out.str();
}

Profile initial_profile(const Scenario& scenario, const StrategicGame& game) {
  if (scenario.initial) return game.ProfileFromLabels(*scenario.initial);
  // Default start: every player on its last strategy (the status quo D in
  // all bundled games).
  Profile profile(game.num_players());
  for (std::size_t i = 0; i < profile.size(); ++i) profile[i] = game.num_strategies(i) - 1;
  return profile;
}

std::string verdict_word(const EquilibriumVerdict& verdict) {
  if (!verdict.is_equilibrium) return "not_equilibrium";
  return verdict.weak ? "weak_equilibrium" : "equilibrium";
}

std::string describe_verdict(const EquilibriumVerdict& verdict) {
  std::string out = verdict_word(verdict);
  if (verdict.binding_deviation) {
    const Deviation& d = *verdict.binding_deviation;
    out += "; binding deviation player " + std::to_string(d.player) + " " + d.machine +
           " value " + with_decimal(d.value) + " gain " + with_decimal(d.gain);
  }
  return out;
}

std::optional<std::pair<Profile, Profile>> strict_pair(const EquilibriumReport& report) {
  std::vector<Profile> strict;
  for (std::size_t k = 0; k < report.equilibria.size(); ++k) {
    if (report.strict[k]) strict.push_back(report.equilibria[k]);
  }
  if (strict.size() != 2) return std::nullopt;
  return std::make_pair(strict[0], strict[1]);
}

std::string winner_label(const StrategicGame& game, const RiskDominanceVerdict& verdict,
                         const Profile& first, const Profile& second) {
  switch (verdict.winner) {
    case RiskWinner::kFirst: return game.Label(first);
    case RiskWinner::kSecond: return game.Label(second);
    case RiskWinner::kTie: return "tie";
  }
  return "tie";
}

AnalysisOutput analyze_nash(const Scenario& scenario, const StrategicGame& game,
                            const RunOptions& options) {
  const EquilibriumReport report = enumerate_pure_nash(game, options.budget);
  std::ostringstream text;
  text << header(scenario, game);
  if (report.search_space_size <= 64) text << "payoffs:\n" << payoff_table(game);
  text << "pure Nash equilibria: " << report.equilibria.size() << " of "
       << report.search_space_size << " profiles\n";
  std::ostringstream csv;
  csv << "profile,payoffs,strict,pareto_dominant\n";
  for (std::size_t k = 0; k < report.equilibria.size(); ++k) {
    const Profile& eq = report.equilibria[k];
    const bool dominant = std::find(report.pareto_dominant.begin(), report.pareto_dominant.end(),
                                    eq) != report.pareto_dominant.end();
    text << "  " << game.Label(eq) << " payoffs " << vector_string(game.Payoff(eq))
         << (report.strict[k] ? " strict" : " weak") << (dominant ? " pareto-dominant" : "")
         << "\n";
    csv << csv_quote(game.Label(eq)) << ',' << csv_quote(vector_string(game.Payoff(eq))) << ','
        << (report.strict[k] ? "true" : "false") << ',' << (dominant ? "true" : "false") << '\n';
  }
  if (report.equilibria.size() == 1) {
    text << "unique pure Nash equilibrium: " << game.Label(report.equilibria.front()) << "\n";
  }
  if (scenario.insurance) {
    const InsuranceProofCheck proof =
        verify_insurance_proof_steps(*scenario.adoption, *scenario.insurance, options.budget);
    text << "uniqueness argument, checked pointwise over " << proof.profiles_checked
         << " profiles:\n"
         << "  every D-player gains by switching to B: "
         << (proof.defectors_improve_by_insuring ? "yes" : "no") << "\n"
         << "  every B-player in a D-free profile gains by switching to A: "
         << (proof.insured_improve_by_adopting ? "yes" : "no") << "\n"
         << "  all-A admits no profitable deviation: "
         << (proof.all_adopt_unimprovable ? "yes" : "no") << "\n";
    if (proof.first_failure) text << "  first failure: " << *proof.first_failure << "\n";
    for (const auto& eq : report.equilibria) {
      const LedgerResult ledger = insurer_ledger(*scenario.adoption, *scenario.insurance, eq);
      text << "insurer ledger at " << game.Label(eq) << ": premiums "
           << to_string(ledger.premiums_collected) << ", reimbursements "
           << to_string(ledger.reimbursements_paid) << ", net " << to_string(ledger.net) << "\n";
    }
  }
  return {text.str(), {{"nash.csv", csv.str()}}};
}

AnalysisOutput analyze_supergame(const Scenario& scenario, const RunOptions&) {
  if (scenario.kind != ScenarioKind::kPdSupergame) {
    throw PreconditionError("supergame_check needs a pd_supergame scenario");
  }
  const PdSchedule& schedule = *scenario.schedule;
  const std::size_t n = schedule.n_players;
  const StrategicGame stage = stage_game(schedule);
  std::ostringstream text;
  text << header(scenario, stage);
  text << "discount factors: " << vector_string(scenario.discounts) << "\n";
  text << "taylor threshold (g_{N-1}-f_{N-1})/(g_{N-1}-g_0): "
       << with_decimal(taylor_threshold(schedule)) << "\n";
  char critical[48];
  std::snprintf(critical, sizeof critical, "%.12f", critical_alpha_numeric(schedule));
  text << "critical alpha by bisection on the D_inf gain: " << critical << "\n";

  const EquilibriumVerdict verdict =
      check_conditional_cooperation(schedule, scenario.discounts, scenario.deviations);
  const EquilibriumVerdict permanent = check_conditional_cooperation(
      schedule, scenario.discounts, DeviationFamily::kPermanentDefection);
  text << "(B_" << n - 1 << ", ...) values: " << vector_string(verdict.values) << "\n";
  text << "deviations (" << to_string(scenario.deviations) << "):\n";
  std::ostringstream csv;
  csv << "family,player,deviation,value,gain\n";
  for (const auto& d : verdict.evaluated) {
    text << "  player " << d.player << " " << std::left << std::setw(22) << d.machine
         << " value " << with_decimal(d.value) << " gain " << with_decimal(d.gain) << "\n";
    csv << to_string(scenario.deviations) << ',' << d.player << ',' << d.machine << ','
        << to_string(d.value) << ',' << to_string(d.gain) << '\n';
  }
  text << "verdict (" << to_string(scenario.deviations) << " deviations): "
       << describe_verdict(verdict) << "\n";
  text << "verdict (permanent defection only): " << describe_verdict(permanent) << "\n";

  const Supergame supergame(stage, scenario.discounts);
  std::vector<StrategyMachine> unconditional(n, constant_machine(kCooperate));
  const EquilibriumVerdict naive =
      check_against_deviations(supergame, unconditional, scenario.deviations);
  text << "(C_inf, ...) verdict: " << describe_verdict(naive) << "\n";
  return {text.str(), {{"supergame.csv", csv.str()}}};
}

AnalysisOutput analyze_dynamics(const Scenario& scenario, const StrategicGame& game,
                                const RunOptions& options) {
  DynamicsConfig config = scenario.dynamics;
  if (options.seed) config.seed = *options.seed;
  const Profile initial = initial_profile(scenario, game);
  const DynamicsPath path = run_dynamics(game, initial, config);

  std::ostringstream text;
  text << header(scenario, game);
  text << "update order: " << to_string(config.order) << ", seed " << config.seed << "\n";
  text << "initial: " << game.Label(initial) << "\n";
  std::ostringstream csv;
  csv << "step,player,from,to,profile\n";
  csv << "0,,,," << csv_quote(game.Label(initial)) << '\n';

  std::size_t cursor = 1;
  for (const auto& update : path.updates) {
    const std::string& from = game.strategies(update.player)[update.from];
    const std::string& to = game.strategies(update.player)[update.to];
    // sequential orders add one profile per update, simultaneous one per step
    const Profile& after = config.order == UpdateOrder::kSimultaneous
                               ? path.profiles[update.step]
                               : path.profiles[cursor++];
    text << "  step " << update.step << ": player " << update.player << " " << from << " -> "
         << to << "  " << game.Label(after) << "\n";
    csv << update.step << ',' << update.player << ',' << from << ',' << to << ','
        << csv_quote(game.Label(after)) << '\n';
  }
  text << "terminal: " << game.Label(path.profiles.back()) << " (" << to_string(path.terminal_kind)
       << ") after " << path.updates_applied << " updates in " << path.steps_taken << " steps\n";
  if (scenario.insurance) {
    const LedgerResult ledger =
        insurer_ledger(*scenario.adoption, *scenario.insurance, path.profiles.back());
    text << "insurer ledger at terminal: net " << to_string(ledger.net) << "\n";
  }
  return {text.str(), {{"dynamics.csv", csv.str()}}};
}

AnalysisOutput analyze_census(const Scenario& scenario, const StrategicGame& game,
                              const RunOptions& options) {
  CensusConfig config = scenario.census;
  config.dynamics = scenario.dynamics;
  if (options.seed) config.dynamics.seed = *options.seed;
  config.budget = options.budget;
  const CensusResult census = basin_census(game, config);

  std::ostringstream text;
  text << header(scenario, game);
  text << "census: " << (census.mode == CensusMode::kExhaustive ? "exhaustive" : "monte_carlo")
       << ", " << census.runs << " runs, update order " << to_string(config.dynamics.order)
       << ", seed " << config.dynamics.seed << "\n";
  for (const auto& entry : census.entries) {
    text << "  " << game.Label(entry.terminal);
    if (entry.kind != TerminalKind::kNash) text << " [" << to_string(entry.kind) << "]";
    text << ": " << entry.count << " (" << fraction_string(entry.count, census.runs) << ")\n";
  }
  if (game.num_players() == 2 && strict_pair(enumerate_pure_nash(game, options.budget))) {
    const PredictionComparison cmp = compare_prediction(game, census);
    text << "risk-dominant: "
         << (cmp.risk_dominant ? game.Label(*cmp.risk_dominant) : std::string("tie"))
         << ", largest basin: "
         << (cmp.largest_basin ? game.Label(*cmp.largest_basin) : std::string("tie"))
         << ", agree: " << (cmp.agree ? "yes" : "no") << "\n";
  }
  return {text.str(), {{"census.csv", census_csv(game, census)}}};
}

AnalysisOutput analyze_risk(const Scenario& scenario, const StrategicGame& game,
                            const RunOptions& options) {
  if (game.num_players() != 2) throw PreconditionError("risk analysis needs a two-player game");
  const auto pair = strict_pair(enumerate_pure_nash(game, options.budget));
  if (!pair) throw PreconditionError("risk analysis needs exactly two strict equilibria");
  const auto& [first, second] = *pair;
  const RiskDominanceVerdict verdict = risk_dominance_2p(game, first, second);
  std::ostringstream text;
  text << header(scenario, game);
  text << "equilibria: " << game.Label(first) << " and " << game.Label(second) << "\n";
  text << "nash products: " << to_string(verdict.nash_product_first) << " vs "
       << to_string(verdict.nash_product_second) << "\n";
  text << "risk-dominant: " << winner_label(game, verdict, first, second) << "\n";
  text << "pareto: " << to_string(pareto_relation(game, first, second)) << "\n";
  std::ostringstream csv;
  csv << "equilibrium_1,equilibrium_2,nash_product_1,nash_product_2,winner\n";
  csv << csv_quote(game.Label(first)) << ',' << csv_quote(game.Label(second)) << ','
      << to_string(verdict.nash_product_first) << ',' << to_string(verdict.nash_product_second)
      << ',' << csv_quote(winner_label(game, verdict, first, second)) << '\n';
  return {text.str(), {{"risk.csv", csv.str()}}};
}

std::string sweep_row(const Scenario& scenario, const RunOptions& options) {
  const StrategicGame game = scenario.BuildGame();
  const EquilibriumReport report = enumerate_pure_nash(game, options.budget);
  std::vector<std::string> cells;
  cells.push_back(std::to_string(report.equilibria.size()));
  std::string labels;
  for (const auto& eq : report.equilibria) {
    if (!labels.empty()) labels += ";";
    labels += game.Label(eq);
  }
  cells.push_back(labels);

  if (scenario.kind == ScenarioKind::kPdSupergame) {
    const EquilibriumVerdict verdict =
        check_conditional_cooperation(*scenario.schedule, scenario.discounts, scenario.deviations);
    const EquilibriumVerdict permanent = check_conditional_cooperation(
        *scenario.schedule, scenario.discounts, DeviationFamily::kPermanentDefection);
    cells.push_back(to_string(taylor_threshold(*scenario.schedule)));
    cells.push_back(verdict_word(verdict));
    cells.push_back(verdict.binding_deviation
                        ? "p" + std::to_string(verdict.binding_deviation->player) + ":" +
                              verdict.binding_deviation->machine
                        : "");
    cells.push_back(verdict.binding_deviation ? to_string(verdict.binding_deviation->gain) : "");
    cells.push_back(verdict_word(permanent));
  } else {
    cells.insert(cells.end(), 5, "");
  }

  const auto pair = game.num_players() == 2 ? strict_pair(report) : std::nullopt;
  if (pair) {
    const RiskDominanceVerdict verdict = risk_dominance_2p(game, pair->first, pair->second);
    cells.push_back(winner_label(game, verdict, pair->first, pair->second));
    cells.push_back(to_string(verdict.nash_product_first));
    cells.push_back(to_string(verdict.nash_product_second));
  } else {
    cells.insert(cells.end(), 3, "");
  }

  if (scenario.analysis == Analysis::kCensus) {
    CensusConfig config = scenario.census;
    if (options.seed) config.dynamics.seed = *options.seed;
    config.budget = options.budget;
    const CensusResult census = basin_census(game, config);
    std::string fractions;
    for (const auto& entry : census.entries) {
      if (!fractions.empty()) fractions += ";";
      fractions += game.Label(entry.terminal);
      if (entry.kind != TerminalKind::kNash) fractions += "[" + to_string(entry.kind) + "]";
      fractions += "=" + fraction_string(entry.count, census.runs);
    }
    cells.push_back(fractions);
  } else {
    cells.push_back("");
  }

  std::string row;
  for (const auto& cell : cells) row += "," + csv_quote(cell);
  return row;
}

}  // namespace

std::string payoff_table(const StrategicGame& game) {
  std::ostringstream out;
  if (game.num_players() == 2) {
    std::vector<std::vector<std::string>> cells;
    std::size_t width = 1;
    for (std::size_t r = 0; r < game.num_strategies(0); ++r) {
      cells.emplace_back();
      for (std::size_t c = 0; c < game.num_strategies(1); ++c) {
        const PayoffVector payoff = game.Payoff({r, c});
        cells.back().push_back(to_string(payoff[0]) + "," + to_string(payoff[1]));
        width = std::max(width, cells.back().back().size());
      }
    }
    std::size_t label_width = 1;
    for (const auto& label : game.strategies(0)) label_width = std::max(label_width, label.size());
    out << "  " << std::setw(static_cast<int>(label_width)) << "";
    for (const auto& label : game.strategies(1)) {
      out << "  " << std::setw(static_cast<int>(width)) << label;
    }
    out << "\n";
    for (std::size_t r = 0; r < cells.size(); ++r) {
      out << "  " << std::setw(static_cast<int>(label_width)) << game.strategies(0)[r];
      for (const auto& cell : cells[r]) out << "  " << std::setw(static_cast<int>(width)) << cell;
      out << "\n";
    }
    return out.str();
  }
  Profile profile = game.FirstProfile();
  do {
    out << "  " << game.Label(profile) << " -> " << vector_string(game.Payoff(profile)) << "\n";
  } while (game.NextProfile(profile));
  return out.str();
}

AnalysisOutput run_analysis(const Scenario& scenario, Analysis analysis, const RunOptions& options) {
  if (analysis == Analysis::kSupergameCheck) return analyze_supergame(scenario, options);
  const StrategicGame game = scenario.BuildGame();
  switch (analysis) {
    case Analysis::kNash: return analyze_nash(scenario, game, options);
    case Analysis::kDynamics: return analyze_dynamics(scenario, game, options);
    case Analysis::kCensus: return analyze_census(scenario, game, options);
    case Analysis::kRisk: return analyze_risk(scenario, game, options);
    case Analysis::kSupergameCheck: break;
  }
  throw PreconditionError("unknown analysis");
}

std::string sweep_csv(const nlohmann::json& base_document, const std::filesystem::path& base_dir,
                      const std::string& param, const std::vector<std::string>& grid,
                      const RunOptions& options, unsigned threads) {
  if (grid.empty()) throw FormatError("sweep grid is empty");
  std::vector<Scenario> scenarios;
  for (const auto& value : grid) {
    nlohmann::json document = base_document;
    set_scenario_field(document, param, value);
    scenarios.push_back(parse_scenario(document, base_dir));
  }

  std::vector<std::string> rows(grid.size());
  if (threads <= 1) {
    for (std::size_t k = 0; k < grid.size(); ++k) rows[k] = sweep_row(scenarios[k], options);
  } else {
    std::vector<std::future<std::string>> pending;
    for (std::size_t k = 0; k < grid.size(); ++k) {
      pending.push_back(std::async(std::launch::async, [&, k] {
        return sweep_row(scenarios[k], options);
      }));
    }
    for (std::size_t k = 0; k < grid.size(); ++k) rows[k] = pending[k].get();
  }

  std::ostringstream out;
  out << "param,value,ne_count,equilibria,taylor_threshold,verdict,binding_deviation,"
         "binding_gain,permanent_defection_verdict,risk_winner,nash_product_1,nash_product_2,"
         "basin_fractions\n";
  for (std::size_t k = 0; k < grid.size(); ++k) {
    out << csv_quote(param) << ',' << csv_quote(grid[k]) << rows[k] << '\n';
  }
  return out.str();
}

std::string run_demo(const std::string& which) {
  std::ostringstream out;
  if (which == "fig1") {
    const PdSchedule schedule = fig1_schedule();
    const StrategicGame game = stage_game(schedule);
    out << "rate allocation stage game, two flows on a 100-unit link\n";
    out << payoff_table(game);
    const EquilibriumReport report = enumerate_pure_nash(game);
    out << "pure Nash equilibria:";
    for (const auto& eq : report.equilibria) out << " " << game.Label(eq);
    out << "\n";
    if (report.equilibria.size() == 1) {
      out << "unique pure Nash equilibrium: " << game.Label(report.equilibria.front()) << "\n";
    }
    out << "taylor threshold: " << with_decimal(taylor_threshold(schedule)) << "\n";
    for (const char* alpha : {"0.6", "0.4"}) {
      const std::vector<Number> discounts(2, parse_number(alpha));
      out << "alpha " << alpha << ", permanent defection only: "
          << describe_verdict(check_conditional_cooperation(schedule, discounts,
                                                            DeviationFamily::kPermanentDefection))
          << "\n";
      out << "alpha " << alpha << ", default deviations: "
          << describe_verdict(check_conditional_cooperation(schedule, discounts)) << "\n";
    }
    return out.str();
  }
  if (which == "staghunt") {
    const AdoptionParams params = AdoptionParams::Uniform(3, 10, 4);
    const StrategicGame game = stag_hunt_game(params);
    const EquilibriumReport report = enumerate_pure_nash(game);
    out << "stag hunt, N=3, beta=10, gamma=4\n" << payoff_table(game) << "pure Nash equilibria:";
    for (const auto& eq : report.equilibria) out << " " << game.Label(eq);
    out << "\n";
    out << "all-A vs all-D: "
        << to_string(pareto_relation(game, Profile(3, StagHuntAction::kAdopt),
                                     Profile(3, StagHuntAction::kDefect)))
        << "\n";
    for (int beta : {10, 6}) {
      const StrategicGame two = stag_hunt_game(AdoptionParams::Uniform(2, beta, 4));
      const Profile adopt(2, StagHuntAction::kAdopt);
      const Profile defect(2, StagHuntAction::kDefect);
      const RiskDominanceVerdict verdict = risk_dominance_2p(two, adopt, defect);
      const CensusResult census = basin_census(two, CensusConfig{});
      const PredictionComparison cmp = compare_prediction(two, census);
      out << "two players, beta=" << beta << ", gamma=4: nash products "
          << to_string(verdict.nash_product_first) << " (A,A) vs "
          << to_string(verdict.nash_product_second) << " (D,D), risk-dominant "
          << winner_label(two, verdict, adopt, defect) << "; basins (A,A)=" << cmp.first_basin
          << " (D,D)=" << cmp.second_basin << "\n";
    }
    return out.str();
  }
  if (which == "insurance") {
    const std::size_t n = 5;
    const AdoptionParams params = AdoptionParams::Uniform(n, 10, 4);
    const InsuranceParams insurance = InsuranceParams::Uniform(n, 1, 10);
    const StrategicGame game = insurance_game(params, insurance);
    const EquilibriumReport report = enumerate_pure_nash(game);
    out << "insurance game, N=5, beta=10, gamma=4, epsilon=1, delta=10\n";
    out << "pure Nash equilibria:";
    for (const auto& eq : report.equilibria) out << " " << game.Label(eq);
    out << "\n";
    const Profile status_quo(n, InsuranceAction::kDefect);
    for (UpdateOrder order : {UpdateOrder::kSimultaneous, UpdateOrder::kFixed}) {
      DynamicsConfig config;
      config.order = order;
      const DynamicsPath path = run_dynamics(game, status_quo, config);
      out << "best-response path (" << to_string(order) << "):";
      for (const auto& profile : path.profiles) out << " " << game.Label(profile);
      out << " [" << to_string(path.terminal_kind) << "]\n";
    }
    const LedgerResult ledger = insurer_ledger(params, insurance, Profile(n, InsuranceAction::kAdopt));
    out << "insurer net at all-A: " << to_string(ledger.net) << "\n";
    return out.str();
  }
  throw FormatError("unknown demo '" + which + "' (expected fig1, staghunt or insurance)");
}

}  // namespace netgame::app
