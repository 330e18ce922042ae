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

#include "netgame/conditional_cooperation.hpp"
#include "netgame/errors.hpp"
#include "netgame/pd_game.hpp"
#include "support/generators.hpp"

using namespace netgame;

TEST_SUITE("pd_game") {

TEST_CASE("validate_schedule") {
  CHECK(validate_schedule(fig1_schedule()).valid());

  const ScheduleReport a1 = validate_schedule(PdSchedule{2, {10, 50}, {5, 90}});
  REQUIRE(a1.violations.size() == 1);
  CHECK(a1.violations[0].assumption == 1);
  CHECK(a1.violations[0].k == 0);

  const ScheduleReport a2 = validate_schedule(PdSchedule{2, {10, 12}, {15, 90}});
  REQUIRE(a2.violations.size() == 1);
  CHECK(a2.violations[0].assumption == 2);

  const ScheduleReport a3 = validate_schedule(PdSchedule{3, {0, 1, 5}, {2, 2, 6}});
  REQUIRE(a3.violations.size() == 1);
  CHECK(a3.violations[0].assumption == 3);
  CHECK(a3.violations[0].k == 1);

  CHECK_THROWS_AS(validate_schedule(PdSchedule{2, {10, 50}, {15}}), FormatError);
  CHECK_THROWS_AS(validate_schedule(PdSchedule{1, {1}, {2}}), FormatError);
}

TEST_CASE("stage_game reproduces the two-flow table") {
  const StrategicGame game = stage_game(fig1_schedule());
  CHECK(game.strategies(0) == std::vector<std::string>{"C", "D"});
  CHECK(game.Payoff({kCooperate, kCooperate}) == PayoffVector{50, 50});
  CHECK(game.Payoff({kCooperate, kDefect}) == PayoffVector{10, 90});
  CHECK(game.Payoff({kDefect, kCooperate}) == PayoffVector{90, 10});
  CHECK(game.Payoff({kDefect, kDefect}) == PayoffVector{15, 15});
}

TEST_CASE("stage_game indexes by the number of other cooperators") {
  const PdSchedule schedule{3, {0, 2, 6}, {1, 4, 8}};
  const StrategicGame game = stage_game(schedule);
  // (C,C,D): C-players see one other cooperator, the D-player sees two.
  CHECK(game.Payoff({kCooperate, kCooperate, kDefect}) == PayoffVector{2, 2, 8});
  CHECK_THROWS_AS(stage_game(PdSchedule{2, {10, 50}, {5, 90}}), PreconditionError);
}

TEST_CASE("property: valid schedules have all-D as unique stage equilibrium and a threshold in (0,1)") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + trial % 4;
    const PdSchedule schedule = testing::random_schedule(rng, n);
    REQUIRE(validate_schedule(schedule).valid());
    const StrategicGame game = stage_game(schedule);
    CHECK(enumerate_pure_nash(game).equilibria == std::vector<Profile>{Profile(n, kDefect)});
    const Number threshold = taylor_threshold(schedule);
    CHECK(threshold > 0);
    CHECK(threshold < 1);

    // symmetry: payoff depends only on own action and cooperator count
    Profile p = game.FirstProfile();
    do {
      Profile swapped = p;
      std::swap(swapped.front(), swapped.back());
      const PayoffVector u = game.Payoff(p);
      const PayoffVector v = game.Payoff(swapped);
      CHECK(u.front() == v.back());
      CHECK(u.back() == v.front());
    } while (game.NextProfile(p));
  }
}

}  // TEST_SUITE
