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

#ifndef NETGAME_CONDITIONAL_COOPERATION_HPP_
#define NETGAME_CONDITIONAL_COOPERATION_HPP_

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "netgame/pd_game.hpp"
#include "netgame/supergame.hpp"

namespace netgame {

// Which unilateral deviations an equilibrium check considers.
//  kDefault: D_inf, defect-once-then-B_{N-1}, defect-first-k for k = 1..5.
//  kPermanentDefection: D_inf only.
enum class DeviationFamily { kDefault, kPermanentDefection };

std::string to_string(DeviationFamily family);
DeviationFamily parse_deviation_family(const std::string& text);

std::vector<StrategyMachine> deviation_machines(DeviationFamily family, std::size_t n_players,
                                                std::size_t me);

struct Deviation {
  std::size_t player = 0;
  std::string machine;
  Number value;  // deviator's discounted value
  Number gain;   // value minus the equilibrium value
};

struct EquilibriumVerdict {
  bool is_equilibrium = false;
  // Equilibrium with some deviation exactly indifferent.
  bool weak = false;
  // Largest-gain deviation (first in family order on ties). Its gain is
  // positive iff is_equilibrium is false.
  std::optional<Deviation> binding_deviation;
  std::vector<Number> values;
  std::vector<Deviation> evaluated;
};

// Tests whether any single player strictly gains by replacing its machine
// with a member of the deviation family.
EquilibriumVerdict check_against_deviations(const Supergame& supergame,
                                            std::span<const StrategyMachine> machines,
                                            DeviationFamily family);

// (g_{N-1} - f_{N-1}) / (g_{N-1} - g_0).
Number taylor_threshold(const PdSchedule& schedule);

// Equilibrium check of (B_{N-1}, ..., B_{N-1}) in the supergame of the
// schedule's stage game.
EquilibriumVerdict check_conditional_cooperation(const PdSchedule& schedule,
                                                 const std::vector<Number>& discounts,
                                                 DeviationFamily family = DeviationFamily::kDefault);

// Gain of a single D_inf deviator against everyone else playing B_{N-1},
// at a uniform discount factor, computed from the machines.
Number permanent_defection_gain(const PdSchedule& schedule, const Number& alpha);

// Root of permanent_defection_gain in alpha by bisection, within `tolerance`.
double critical_alpha_numeric(const PdSchedule& schedule, double tolerance = 1e-12);

}  // namespace netgame

#endif  // NETGAME_CONDITIONAL_COOPERATION_HPP_
