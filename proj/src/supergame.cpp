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

#include "netgame/supergame.hpp"

#include <cmath>
#include <map>
#include <utility>

#include "netgame/errors.hpp"
#include "netgame/pd_game.hpp"

namespace netgame {
namespace {

struct JointCycle {
  std::vector<std::vector<std::size_t>> states;  // lead-in followed by one period
  std::size_t lead_in = 0;
  std::size_t period = 0;
};

void validate_machines(const Supergame& supergame, std::span<const StrategyMachine> machines) {
  const StrategicGame& stage = supergame.stage();
  if (machines.size() != stage.num_players()) {
    throw PreconditionError("need one machine per player (" +
                            std::to_string(stage.num_players()) + "), got " +
                            std::to_string(machines.size()));
  }
  for (std::size_t i = 0; i < machines.size(); ++i) {
    for (std::size_t s = 0; s < machines[i].num_states(); ++s) {
      if (machines[i].Action(s) >= stage.num_strategies(i)) {
        throw PreconditionError("machine '" + machines[i].name() + "' of player " +
                                std::to_string(i) + " emits an action outside the stage game");
      }
    }
  }
}

Profile emissions(std::span<const StrategyMachine> machines,
                  const std::vector<std::size_t>& state) {
  Profile profile(machines.size());
  for (std::size_t i = 0; i < machines.size(); ++i) profile[i] = machines[i].Action(state[i]);
  return profile;
}

std::vector<std::size_t> step(std::span<const StrategyMachine> machines,
                              const std::vector<std::size_t>& state, const Profile& observed) {
  std::vector<std::size_t> next(machines.size());
  for (std::size_t i = 0; i < machines.size(); ++i) {
    next[i] = machines[i].Next(state[i], observed);
  }
  return next;
}

std::vector<std::size_t> initial_state(std::span<const StrategyMachine> machines) {
  std::vector<std::size_t> state(machines.size());
  for (std::size_t i = 0; i < machines.size(); ++i) state[i] = machines[i].initial();
  return state;
}

JointCycle find_cycle(std::span<const StrategyMachine> machines) {
  JointCycle cycle;
  std::map<std::vector<std::size_t>, std::size_t> first_seen;
  std::vector<std::size_t> state = initial_state(machines);
  while (true) {
    const auto [it, inserted] = first_seen.emplace(state, cycle.states.size());
    if (!inserted) {
      cycle.lead_in = it->second;
      cycle.period = cycle.states.size() - it->second;
      return cycle;
    }
    cycle.states.push_back(state);
    state = step(machines, state, emissions(machines, state));
  }
}

}  // namespace

Supergame::Supergame(StrategicGame stage, std::vector<Number> discounts)
    : stage_(std::move(stage)), discounts_(std::move(discounts)) {
  if (discounts_.size() != stage_.num_players()) {
    throw ParameterError("need one discount factor per player");
  }
  for (std::size_t i = 0; i < discounts_.size(); ++i) {
    if (!(discounts_[i] > 0 && discounts_[i] < 1)) {
      throw ParameterError("discount factor of player " + std::to_string(i) +
                           " must lie in (0,1), got " + to_string(discounts_[i]));
    }
  }
}

Supergame::Supergame(StrategicGame stage, const Number& uniform_discount)
    : Supergame(stage, std::vector<Number>(stage.num_players(), uniform_discount)) {}

StrategyMachine::StrategyMachine(std::string name, std::vector<std::size_t> emit,
                                 std::size_t initial, Transition next)
    : name_(std::move(name)), emit_(std::move(emit)), initial_(initial), next_(std::move(next)) {
  if (emit_.empty()) throw PreconditionError("machine '" + name_ + "' has no states");
  if (initial_ >= emit_.size()) {
    throw PreconditionError("machine '" + name_ + "' has an out-of-range initial state");
  }
}

std::size_t StrategyMachine::Next(std::size_t state, const Profile& observed) const {
  const std::size_t next = next_(state, observed);
  if (next >= emit_.size()) {
    throw PreconditionError("machine '" + name_ + "' moved to an undefined state");
  }
  return next;
}

StrategyMachine constant_machine(std::size_t action, std::string name) {
  if (name.empty()) {
    name = action == kCooperate ? "C_inf" : action == kDefect ? "D_inf"
                                                              : "const_" + std::to_string(action);
  }
  return StrategyMachine(std::move(name), {action}, 0,
                         [](std::size_t, const Profile&) { return std::size_t{0}; });
}

StrategyMachine tit_for_tat_machine(std::size_t threshold, std::size_t n_players,
                                    std::size_t me) {
  if (n_players < 1 || me >= n_players || threshold > n_players - 1) {
    throw PreconditionError("B_n needs 0 <= n <= N-1 and a valid player index");
  }
  // state 0 cooperates, state 1 defects
  return StrategyMachine(
      "B_" + std::to_string(threshold), {kCooperate, kDefect}, 0,
      [threshold, me](std::size_t, const Profile& observed) {
        std::size_t others_cooperating = 0;
        for (std::size_t j = 0; j < observed.size(); ++j) {
          if (j != me && observed[j] == kCooperate) ++others_cooperating;
        }
        return others_cooperating >= threshold ? std::size_t{0} : std::size_t{1};
      });
}

StrategyMachine defect_once_then_tit_for_tat(std::size_t n_players, std::size_t me) {
  if (n_players < 2 || me >= n_players) throw PreconditionError("invalid player index");
  const std::size_t threshold = n_players - 1;
  // state 0 is the opening defection, then 1 cooperates and 2 defects as B_{N-1}
  return StrategyMachine(
      "defect_once_then_B_" + std::to_string(threshold), {kDefect, kCooperate, kDefect}, 0,
      [threshold, me](std::size_t, const Profile& observed) {
        std::size_t others_cooperating = 0;
        for (std::size_t j = 0; j < observed.size(); ++j) {
          if (j != me && observed[j] == kCooperate) ++others_cooperating;
        }
        return others_cooperating >= threshold ? std::size_t{1} : std::size_t{2};
      });
}

StrategyMachine defect_first_k_machine(std::size_t k) {
  // states 0..k-1 count down the burst, state k cooperates forever
  std::vector<std::size_t> emit(k + 1, kDefect);
  emit[k] = kCooperate;
  return StrategyMachine("defect_first_" + std::to_string(k), std::move(emit), 0,
                         [k](std::size_t state, const Profile&) {
                           return state < k ? state + 1 : k;
                         });
}

PlayTrace simulate(const Supergame& supergame, std::span<const StrategyMachine> machines,
                   std::size_t horizon) {
  if (horizon < 1) throw PreconditionError("horizon must be at least 1");
  validate_machines(supergame, machines);
  PlayTrace trace;
  std::vector<std::size_t> state = initial_state(machines);
  for (std::size_t t = 0; t < horizon; ++t) {
    Profile profile = emissions(machines, state);
    trace.machine_states.push_back(state);
    state = step(machines, state, profile);
    trace.profiles.push_back(std::move(profile));
  }
  const JointCycle cycle = find_cycle(machines);
  trace.lead_in = cycle.lead_in;
  trace.period = cycle.period;
  return trace;
}

Number discounted_value(const Supergame& supergame, std::span<const StrategyMachine> machines,
                        std::size_t player) {
  validate_machines(supergame, machines);
  if (player >= supergame.num_players()) throw PreconditionError("player index out of range");
  const Number& alpha = supergame.discount(player);
  const JointCycle cycle = find_cycle(machines);

  Number lead_sum = 0;
  Number weight = 1;
  for (std::size_t t = 0; t < cycle.lead_in; ++t) {
    lead_sum += weight * supergame.stage().Payoff(emissions(machines, cycle.states[t]))[player];
    weight *= alpha;
  }
  // weight == alpha^lead_in here
  Number cycle_sum = 0;
  Number inner = 1;
  for (std::size_t j = 0; j < cycle.period; ++j) {
    cycle_sum += inner * supergame.stage()
                             .Payoff(emissions(machines, cycle.states[cycle.lead_in + j]))[player];
    inner *= alpha;
  }
  // inner == alpha^period
  return lead_sum + weight * cycle_sum / (1 - inner);
}

double truncated_value(const Supergame& supergame, std::span<const StrategyMachine> machines,
                       std::size_t player, std::size_t horizon) {
  validate_machines(supergame, machines);
  if (player >= supergame.num_players()) throw PreconditionError("player index out of range");
  const double alpha = to_double(supergame.discount(player));
  std::vector<std::size_t> state = initial_state(machines);
  double sum = 0.0;
  double weight = 1.0;
  for (std::size_t t = 0; t < horizon; ++t) {
    const Profile profile = emissions(machines, state);
    sum += weight * to_double(supergame.stage().Payoff(profile)[player]);
    weight *= alpha;
    state = step(machines, state, profile);
  }
  return sum;
}

}  // namespace netgame
