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

#include <doctest.h>

#include <random>

#include "netgame/adoption.hpp"
#include "netgame/dynamics.hpp"
#include "netgame/errors.hpp"
#include "support/generators.hpp"

using namespace netgame;

namespace {

constexpr std::size_t A = InsuranceAction::kAdopt;
constexpr std::size_t B = InsuranceAction::kInsure;
constexpr std::size_t D = InsuranceAction::kDefect;

StrategicGame insurance(std::size_t n) {
  return insurance_game(AdoptionParams::Uniform(n, 10, 4), InsuranceParams::Uniform(n, 1, 10));
}

}  // namespace

TEST_SUITE("dynamics") {

TEST_CASE("fixed order walks the insured path to all-A") {
  const DynamicsPath path = run_dynamics(insurance(3), {D, D, D}, {});
  const std::vector<Profile> expected{{D, D, D}, {B, D, D}, {B, B, D},
                                      {B, B, A}, {A, B, A}, {A, A, A}};
  CHECK(path.profiles == expected);
  CHECK(path.terminal_kind == TerminalKind::kNash);
  CHECK(path.updates_applied == 5);
  REQUIRE(path.updates.size() == 5);
  CHECK(path.updates[0].player == 0);
  CHECK(path.updates[0].from == D);
  CHECK(path.updates[0].to == B);
}

TEST_CASE("simultaneous order goes all-D, all-B, all-A") {
  const DynamicsPath path =
      run_dynamics(insurance(5), Profile(5, D), {UpdateOrder::kSimultaneous, 0, 0});
  CHECK(path.profiles == std::vector<Profile>{Profile(5, D), Profile(5, B), Profile(5, A)});
  CHECK(path.terminal_kind == TerminalKind::kNash);
}

TEST_CASE("stag hunt fixed points and moves") {
  const StrategicGame game = stag_hunt_game(AdoptionParams::Uniform(2, 6, 4));
  const DynamicsPath still = run_dynamics(game, {1, 1}, {});
  CHECK(still.profiles.size() == 1);
  CHECK(still.updates_applied == 0);
  CHECK(still.terminal_kind == TerminalKind::kNash);
  CHECK(run_dynamics(game, {1, 0}, {}).profiles.back() == Profile{0, 0});
  CHECK(run_dynamics(game, {0, 1}, {}).profiles.back() == Profile{1, 1});
}

TEST_CASE("matching pennies cycles") {
  const StrategicGame game = StrategicGame::FromTable(
      {{"H", "T"}, {"H", "T"}},
      {{{0, 0}, {1, -1}}, {{0, 1}, {-1, 1}}, {{1, 0}, {-1, 1}}, {{1, 1}, {1, -1}}});
  CHECK(run_dynamics(game, {0, 0}, {}).terminal_kind == TerminalKind::kCycle);
  CHECK(run_dynamics(game, {0, 0}, {UpdateOrder::kSimultaneous, 0, 0}).terminal_kind ==
        TerminalKind::kCycle);
  CHECK(run_dynamics(game, {0, 0}, {UpdateOrder::kRandom, 0, 5}).terminal_kind !=
        TerminalKind::kNash);
  const DynamicsPath capped = run_dynamics(game, {0, 0}, {UpdateOrder::kRandom, 1, 5});
  CHECK(capped.terminal_kind == TerminalKind::kBudgetExhausted);
  CHECK(capped.steps_taken == 1);
}

TEST_CASE("census") {
  const StrategicGame hunt = stag_hunt_game(AdoptionParams::Uniform(2, 6, 4));
  const CensusResult census = basin_census(hunt, CensusConfig{});
  CHECK(census.runs == 4);
  CHECK(census.CountOf({0, 0}) == 2);
  CHECK(census.CountOf({1, 1}) == 2);
  CHECK(census_csv(hunt, census) ==
        "terminal_profile,count,fraction\n\"(A,A)\",2,0.500000\n\"(D,D)\",2,0.500000\n");

  const CensusResult ins = basin_census(insurance(2), CensusConfig{});
  REQUIRE(ins.entries.size() == 1);
  CHECK(ins.CountOf({A, A}) == 9);

  CensusConfig small;
  small.budget = 8;
  CHECK_THROWS_AS(basin_census(insurance(2), small), BudgetExceeded);
}

TEST_CASE("monte carlo census is deterministic and thread independent") {
  const StrategicGame game = insurance(3);
  CensusConfig config;
  config.mode = CensusMode::kMonteCarlo;
  config.samples = 300;
  config.dynamics = {UpdateOrder::kRandom, 0, 99};
  const CensusResult one = basin_census(game, config);
  config.threads = 4;
  const CensusResult four = basin_census(game, config);
  CHECK(one.runs == 300);
  CHECK(census_csv(game, one) == census_csv(game, four));
  CHECK(one.CountOf({A, A, A}) == 300);
}

TEST_CASE("compare_prediction") {
  auto compare = [](int beta) {
    const StrategicGame game = stag_hunt_game(AdoptionParams::Uniform(2, beta, 4));
    return compare_prediction(game, basin_census(game, CensusConfig{}));
  };
  const PredictionComparison low = compare(6);
  CHECK(low.risk.winner == RiskWinner::kSecond);
  CHECK(low.risk_dominant == std::optional<Profile>(Profile{1, 1}));
  CHECK_FALSE(low.largest_basin.has_value());
  CHECK(low.agree);

  const PredictionComparison high = compare(10);
  CHECK(high.risk.winner == RiskWinner::kFirst);
  CHECK(high.risk.nash_product_first == 36);
  CHECK(high.agree);

  const PredictionComparison tie = compare(8);
  CHECK(tie.risk.winner == RiskWinner::kTie);
  CHECK_FALSE(tie.risk_dominant.has_value());

  CHECK_THROWS_AS(compare_prediction(insurance(2), basin_census(insurance(2), CensusConfig{})),
                  PreconditionError);
}

TEST_CASE("property: sequential dynamics change one strategy per step, strictly improving") {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 200; ++trial) {
    const StrategicGame game = testing::random_table_game(rng, 2 + trial % 3, 3);
    Profile start(game.num_players());
    for (std::size_t i = 0; i < start.size(); ++i)
      start[i] = std::uniform_int_distribution<std::size_t>(0, game.num_strategies(i) - 1)(rng);
    const UpdateOrder order = trial % 2 ? UpdateOrder::kFixed : UpdateOrder::kRandom;
    const DynamicsConfig config{order, 0, static_cast<std::uint64_t>(trial)};
    const DynamicsPath path = run_dynamics(game, start, config);
    CHECK(path.profiles.front() == start);
    CHECK(path.updates.size() + 1 == path.profiles.size());
    for (std::size_t k = 0; k < path.updates.size(); ++k) {
      const Profile& before = path.profiles[k];
      const Profile& after = path.profiles[k + 1];
      std::size_t changed = 0;
      for (std::size_t i = 0; i < before.size(); ++i) changed += before[i] != after[i];
      CHECK(changed == 1);
      const std::size_t who = path.updates[k].player;
      CHECK(game.Payoff(after)[who] > game.Payoff(before)[who]);
    }
    if (path.terminal_kind == TerminalKind::kNash) CHECK(is_pure_nash(game, path.profiles.back()));
    CHECK(run_dynamics(game, start, config).profiles == path.profiles);
  }
}

TEST_CASE("property: Nash profiles are their own terminal under every order") {
  std::mt19937_64 rng(67);
  for (int trial = 0; trial < 100; ++trial) {
    const StrategicGame game = testing::random_table_game(rng, 2 + trial % 3, 3);
    for (const Profile& ne : enumerate_pure_nash(game).equilibria) {
      for (UpdateOrder order : {UpdateOrder::kFixed, UpdateOrder::kRandom, UpdateOrder::kSimultaneous}) {
        const DynamicsPath path = run_dynamics(game, ne, {order, 0, 1});
        CHECK(path.profiles == std::vector<Profile>{ne});
        CHECK(path.terminal_kind == TerminalKind::kNash);
      }
    }
  }
}

TEST_CASE("property: insurance dynamics never move to D and always reach all-A") {
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 2 + trial % 3;
    const AdoptionParams params = testing::random_adoption(rng, n);
    const StrategicGame game = insurance_game(params, testing::random_insurance(rng, params));
    Profile start = game.FirstProfile();
    do {
      for (UpdateOrder order : {UpdateOrder::kFixed, UpdateOrder::kRandom, UpdateOrder::kSimultaneous}) {
        const DynamicsPath path = run_dynamics(game, start, {order, 0, 7});
        CHECK(path.profiles.back() == Profile(n, A));
        for (const auto& u : path.updates) CHECK(u.to != D);
      }
    } while (game.NextProfile(start));
  }
}

}  // TEST_SUITE
