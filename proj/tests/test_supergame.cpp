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

#include <cmath>
#include <random>

#include "netgame/conditional_cooperation.hpp"
#include "netgame/errors.hpp"
#include "netgame/supergame.hpp"
#include "support/generators.hpp"

using namespace netgame;

namespace {

const Profile kCC{kCooperate, kCooperate};
const Profile kCD{kCooperate, kDefect};
const Profile kDD{kDefect, kDefect};

Supergame fig1_supergame(const Number& alpha) { return Supergame(stage_game(fig1_schedule()), alpha); }

}  // namespace

TEST_SUITE("supergame") {

TEST_CASE("constant machines") {
  const Supergame sg = fig1_supergame(Number(1, 2));
  std::vector<StrategyMachine> cc{constant_machine(kCooperate), constant_machine(kDefect)};
  const PlayTrace trace = simulate(sg, cc, 3);
  for (const auto& p : trace.profiles) CHECK(p == kCD);
  CHECK(sg.stage().Payoff(trace.profiles[0]) == PayoffVector{10, 90});

  std::vector<StrategyMachine> dd{constant_machine(kDefect), constant_machine(kDefect)};
  const PlayTrace both = simulate(sg, dd, 2);
  CHECK(both.profiles == std::vector<Profile>{kDD, kDD});
  CHECK(constant_machine(kCooperate).name() == "C_inf");
}

TEST_CASE("tit-for-tat machines") {
  const Supergame sg = fig1_supergame(Number(1, 2));
  std::vector<StrategyMachine> vs_defector{tit_for_tat_machine(1, 2, 0), constant_machine(kDefect)};
  const PlayTrace trace = simulate(sg, vs_defector, 3);
  CHECK(trace.profiles == std::vector<Profile>{kCD, kDD, kDD});
  CHECK(trace.lead_in == 1);
  CHECK(trace.period == 1);

  std::vector<StrategyMachine> mutual{tit_for_tat_machine(1, 2, 0), tit_for_tat_machine(1, 2, 1)};
  const PlayTrace coop = simulate(sg, mutual, 5);
  CHECK(coop.profiles == std::vector<Profile>(5, kCC));
  CHECK(coop.lead_in == 0);
  CHECK(coop.period == 1);

  // N = 3, two B_2 players against a defector: both defect from t = 1 on.
  const PdSchedule three{3, {0, 2, 6}, {1, 4, 8}};
  const Supergame sg3(stage_game(three), Number(1, 2));
  std::vector<StrategyMachine> mixed{tit_for_tat_machine(2, 3, 0), tit_for_tat_machine(2, 3, 1),
                                     constant_machine(kDefect)};
  const PlayTrace t3 = simulate(sg3, mixed, 4);
  CHECK(t3.profiles[0] == Profile{kCooperate, kCooperate, kDefect});
  for (std::size_t t = 1; t < 4; ++t) CHECK(t3.profiles[t] == Profile(3, kDefect));

  CHECK_THROWS_AS(tit_for_tat_machine(2, 2, 0), PreconditionError);
}

TEST_CASE("simulate records states and rejects bad inputs") {
  const Supergame sg = fig1_supergame(Number(1, 2));
  std::vector<StrategyMachine> burst{defect_first_k_machine(2), constant_machine(kCooperate)};
  const PlayTrace trace = simulate(sg, burst, 4);
  CHECK(trace.machine_states[0] == std::vector<std::size_t>{0, 0});
  CHECK(trace.machine_states[3] == std::vector<std::size_t>{2, 0});
  CHECK(trace.lead_in == 2);
  CHECK(trace.period == 1);
  CHECK_THROWS_AS(simulate(sg, burst, 0), PreconditionError);
  std::vector<StrategyMachine> one{constant_machine(kCooperate)};
  CHECK_THROWS_AS(simulate(sg, one, 3), PreconditionError);
  std::vector<StrategyMachine> bad{constant_machine(5), constant_machine(kCooperate)};
  CHECK_THROWS_AS(simulate(sg, bad, 3), PreconditionError);
}

TEST_CASE("discount factors must lie strictly between 0 and 1") {
  CHECK_THROWS_AS(fig1_supergame(1), ParameterError);
  CHECK_THROWS_AS(fig1_supergame(0), ParameterError);
  CHECK_THROWS_AS(Supergame(stage_game(fig1_schedule()), std::vector<Number>{Number(1, 2)}),
                  ParameterError);
}

TEST_CASE("discounted_value closed forms") {
  std::vector<StrategyMachine> dd{constant_machine(kDefect), constant_machine(kDefect)};
  CHECK(discounted_value(fig1_supergame(Number(1, 2)), dd, 0) == 30);

  std::vector<StrategyMachine> tft_vs_d{tit_for_tat_machine(1, 2, 0), constant_machine(kDefect)};
  CHECK(discounted_value(fig1_supergame(Number(1, 2)), tft_vs_d, 0) == 25);

  std::vector<StrategyMachine> mutual{tit_for_tat_machine(1, 2, 0), tit_for_tat_machine(1, 2, 1)};
  const Supergame sg = fig1_supergame(Number(3, 5));
  const Number exact = discounted_value(sg, mutual, 0);
  CHECK(exact == 125);
  CHECK(discounted_value(sg, mutual, 1) == 125);
  CHECK(std::abs(truncated_value(sg, mutual, 0, 200) - 125.0) < 1e-9);
}

TEST_CASE("per-player discount factors") {
  const Supergame sg(stage_game(fig1_schedule()), std::vector<Number>{Number(1, 2), Number(9, 10)});
  std::vector<StrategyMachine> dd{constant_machine(kDefect), constant_machine(kDefect)};
  CHECK(discounted_value(sg, dd, 0) == 30);
  CHECK(discounted_value(sg, dd, 1) == 150);
}

TEST_CASE("taylor_threshold") {
  CHECK(taylor_threshold(fig1_schedule()) == Number(8, 15));
  CHECK(taylor_threshold(PdSchedule{2, {1, 3}, {2, 4}}) == Number(1, 2));
  // numerator g_{N-1} - f_{N-1} shrinking to zero
  const Number tiny(1, 1000000);
  const Number near_zero = taylor_threshold(PdSchedule{2, {1, 4 - tiny}, {2, 4}});
  CHECK(near_zero > 0);
  CHECK(near_zero < Number(1, 100000));
  CHECK_THROWS_AS(taylor_threshold(PdSchedule{2, {10, 12}, {15, 90}}), PreconditionError);
}

TEST_CASE("critical_alpha_numeric is an independent route to the threshold") {
  CHECK(std::abs(critical_alpha_numeric(fig1_schedule()) - 8.0 / 15.0) < 1e-9);
  CHECK(std::abs(critical_alpha_numeric(PdSchedule{2, {1, 3}, {2, 4}}) - 0.5) < 1e-9);
  PdSchedule scaled = fig1_schedule();
  for (auto& v : scaled.f) v *= 10;
  for (auto& v : scaled.g) v *= 10;
  CHECK(std::abs(critical_alpha_numeric(scaled) - 8.0 / 15.0) < 1e-9);
}

TEST_CASE("conditional cooperation against permanent defection") {
  const PdSchedule fig1 = fig1_schedule();
  const auto above = check_conditional_cooperation(fig1, {Number(3, 5), Number(3, 5)},
                                                   DeviationFamily::kPermanentDefection);
  CHECK(above.is_equilibrium);
  CHECK(above.values == std::vector<Number>{125, 125});
  REQUIRE(above.binding_deviation);
  CHECK(above.binding_deviation->machine == "D_inf");
  CHECK(above.binding_deviation->value == Number(225, 2));

  const auto below = check_conditional_cooperation(fig1, {Number(2, 5), Number(2, 5)},
                                                   DeviationFamily::kPermanentDefection);
  CHECK_FALSE(below.is_equilibrium);
  REQUIRE(below.binding_deviation);
  CHECK(below.binding_deviation->machine == "D_inf");
  CHECK(below.binding_deviation->value == 100);
  CHECK(below.values[0] == Number(250, 3));

  const auto at = check_conditional_cooperation(fig1, {Number(8, 15), Number(8, 15)},
                                                DeviationFamily::kPermanentDefection);
  CHECK(at.is_equilibrium);
  CHECK(at.weak);
  CHECK(at.binding_deviation->gain == 0);
}

TEST_CASE("two-player tit-for-tat loses to a single defection on the two-flow schedule") {
  // Against B_1, defecting once and then cooperating gains
  // (90 - 50) - alpha (50 - 10) = 40 (1 - alpha) > 0 for every alpha < 1.
  for (const Number alpha : {Number(2, 5), Number(8, 15), Number(3, 5), Number(99, 100)}) {
    const auto verdict = check_conditional_cooperation(fig1_schedule(), {alpha, alpha});
    CHECK_FALSE(verdict.is_equilibrium);
    bool found = false;
    for (const auto& d : verdict.evaluated) {
      if (d.machine == "defect_first_1") {
        CHECK(d.gain == 40 * (1 - alpha));
        found = true;
      }
    }
    CHECK(found);
  }
  const auto at_six = check_conditional_cooperation(fig1_schedule(), {Number(3, 5), Number(3, 5)});
  CHECK(at_six.binding_deviation->machine == "defect_once_then_B_1");
  CHECK(at_six.binding_deviation->gain == 25);
}

TEST_CASE("with three or more players the default family is no stronger than D_inf") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 30; ++trial) {
    const PdSchedule schedule = testing::random_schedule(rng, 3 + trial % 3);
    const Number alpha = testing::random_rational(rng, 0, 1, 20);
    if (alpha <= 0 || alpha >= 1) continue;
    const std::vector<Number> discounts(schedule.n_players, alpha);
    const auto full = check_conditional_cooperation(schedule, discounts);
    const auto permanent =
        check_conditional_cooperation(schedule, discounts, DeviationFamily::kPermanentDefection);
    CHECK(full.is_equilibrium == permanent.is_equilibrium);
    CHECK(full.is_equilibrium == (alpha >= taylor_threshold(schedule)));
  }
}

TEST_CASE("property: unconditional cooperation is never an equilibrium") {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 2 + trial % 4;
    const PdSchedule schedule = testing::random_schedule(rng, n);
    for (const Number alpha : {Number(1, 10), Number(1, 2), Number(9, 10)}) {
      const Supergame sg(stage_game(schedule), alpha);
      const std::vector<StrategyMachine> naive(n, constant_machine(kCooperate));
      const auto verdict = check_against_deviations(sg, naive, DeviationFamily::kDefault);
      CHECK_FALSE(verdict.is_equilibrium);
      CHECK(verdict.binding_deviation->gain > 0);
    }
  }
}

TEST_CASE("property: critical alpha matches the closed-form threshold") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    const PdSchedule schedule = testing::random_schedule(rng, 2 + trial % 4);
    CHECK(std::abs(critical_alpha_numeric(schedule) - to_double(taylor_threshold(schedule))) < 1e-8);
  }
}

TEST_CASE("property: permanent-defection gain is strictly decreasing in alpha") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 40; ++trial) {
    const PdSchedule schedule = testing::random_schedule(rng, 2 + trial % 4);
    Number previous = permanent_defection_gain(schedule, Number(1, 50));
    for (int k = 2; k < 50; ++k) {
      const Number gain = permanent_defection_gain(schedule, Number(k, 50));
      CHECK(gain < previous);
      previous = gain;
    }
  }
}

TEST_CASE("property: truncation error bound and agreement with the closed form") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 60; ++trial) {
    const PdSchedule schedule = testing::random_schedule(rng, 2);
    const Number alpha = testing::random_rational(rng, 1, 18, 1) / 20;
    const Supergame sg(stage_game(schedule), alpha);
    std::vector<StrategyMachine> machines{testing::random_machine(rng, 2, 4),
                                          testing::random_machine(rng, 2, 2)};
    double vmax = 0;
    for (const auto& v : schedule.f) vmax = std::max(vmax, std::abs(to_double(v)));
    for (const auto& v : schedule.g) vmax = std::max(vmax, std::abs(to_double(v)));
    const double a = to_double(alpha);
    for (std::size_t player = 0; player < 2; ++player) {
      const double exact = to_double(discounted_value(sg, machines, player));
      for (std::size_t horizon : {10, 50, 200}) {
        const double bound = vmax * std::pow(a, static_cast<double>(horizon)) / (1 - a);
        CHECK(std::abs(exact - truncated_value(sg, machines, player, horizon)) <= bound + 1e-9);
      }
      CHECK(std::abs(exact - truncated_value(sg, machines, player, 500)) < 1e-9);
    }
  }
}

}  // TEST_SUITE
