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

#ifndef NETGAME_SUPERGAME_HPP_
#define NETGAME_SUPERGAME_HPP_

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "netgame/game.hpp"

namespace netgame {

// Infinite repetition of a stage game with per-player exponential
// discounting, 0 < alpha_i < 1.
class Supergame {
 public:
  Supergame(StrategicGame stage, std::vector<Number> discounts);
  Supergame(StrategicGame stage, const Number& uniform_discount);

  const StrategicGame& stage() const { return stage_; }
  const std::vector<Number>& discounts() const { return discounts_; }
  const Number& discount(std::size_t player) const { return discounts_.at(player); }
  std::size_t num_players() const { return stage_.num_players(); }

 private:
  StrategicGame stage_;
  std::vector<Number> discounts_;
};

// Finite-state strategy for a supergame. The machine emits the action of
// its current state and moves on after observing the full action profile
// of the period.
class StrategyMachine {
 public:
  using Transition = std::function<std::size_t(std::size_t state, const Profile& observed)>;

  StrategyMachine(std::string name, std::vector<std::size_t> emit, std::size_t initial,
                  Transition next);

  const std::string& name() const { return name_; }
  std::size_t num_states() const { return emit_.size(); }
  std::size_t initial() const { return initial_; }
  std::size_t Action(std::size_t state) const { return emit_.at(state); }
  std::size_t Next(std::size_t state, const Profile& observed) const;

 private:
  std::string name_;
  std::vector<std::size_t> emit_;
  std::size_t initial_;
  Transition next_;
};

// One-state machine playing `action` forever (C-infinity, D-infinity).
StrategyMachine constant_machine(std::size_t action, std::string name = "");

// B_n for player `me`: cooperate first, then cooperate iff at least
// `threshold` of the other players cooperated in the previous period.
StrategyMachine tit_for_tat_machine(std::size_t threshold, std::size_t n_players,
                                    std::size_t me);

// Defect in the first period, then behave as B_{N-1} reacting to the
// observed history.
StrategyMachine defect_once_then_tit_for_tat(std::size_t n_players, std::size_t me);

// Defect for the first `k` periods, then cooperate unconditionally.
StrategyMachine defect_first_k_machine(std::size_t k);

struct PlayTrace {
  std::vector<Profile> profiles;
  std::vector<std::vector<std::size_t>> machine_states;
  // The joint machine state sequence is eventually periodic: states at
  // t and t + period agree for all t >= lead_in.
  std::size_t lead_in = 0;
  std::size_t period = 0;
};

PlayTrace simulate(const Supergame& supergame, std::span<const StrategyMachine> machines,
                   std::size_t horizon);

// Exact infinite discounted sum: finite lead-in plus a geometric closed
// form over the detected cycle.
Number discounted_value(const Supergame& supergame, std::span<const StrategyMachine> machines,
                        std::size_t player);

// Sum of the first `horizon` discounted stage payoffs, in floating point.
double truncated_value(const Supergame& supergame, std::span<const StrategyMachine> machines,
                       std::size_t player, std::size_t horizon);

}  // namespace netgame

#endif  // NETGAME_SUPERGAME_HPP_
