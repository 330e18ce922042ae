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

#ifndef NETGAME_PD_GAME_HPP_
#define NETGAME_PD_GAME_HPP_

#include <string>
#include <vector>

#include "netgame/game.hpp"

namespace netgame {

// Action indices of the rate-allocation stage game: C keeps congestion
// control, D obviates it.
inline constexpr std::size_t kCooperate = 0;
inline constexpr std::size_t kDefect = 1;

// Symmetric N-player prisoner's dilemma payoffs. f[k] is the payoff for
// playing C while k others play C; g[k] the payoff for D in the same case.
struct PdSchedule {
  std::size_t n_players = 0;
  std::vector<Number> f;
  std::vector<Number> g;
};

struct ScheduleViolation {
  int assumption = 0;  // 1, 2 or 3
  std::size_t k = 0;
  std::string message;
};

struct ScheduleReport {
  std::vector<ScheduleViolation> violations;
  bool valid() const { return violations.empty(); }
  std::string Summary() const;
};

// Checks g_k > f_k for all k, f_{N-1} > g_0, and g_k > g_0 for k > 0.
// Throws FormatError when the arrays do not both have length N >= 2.
ScheduleReport validate_schedule(const PdSchedule& schedule);

// Throws PreconditionError on an invalid schedule.
void require_valid_schedule(const PdSchedule& schedule);

StrategicGame stage_game(const PdSchedule& schedule);

// Two flows sharing a 100-unit link: (C,C)=50/50, (C,D)=10/90, (D,D)=15/15.
PdSchedule fig1_schedule();

}  // namespace netgame

#endif  // NETGAME_PD_GAME_HPP_
