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

#include "netgame/conditional_cooperation.hpp"

#include "netgame/errors.hpp"

namespace netgame {

namespace {
constexpr std::size_t kMaxBurst = 5;

std::vector<StrategyMachine> all_tit_for_tat(std::size_t n) {
  std::vector<StrategyMachine> machines;
  for (std::size_t i = 0; i < n; ++i) machines.push_back(tit_for_tat_machine(n - 1, n, i));
  return machines;
}
}  // namespace

std::string to_string(DeviationFamily family) {
  return family == DeviationFamily::kDefault ? "default" : "permanent_defection";
}

DeviationFamily parse_deviation_family(const std::string& text) {
  if (text == "default") return DeviationFamily::kDefault;
  if (text == "permanent_defection" || text == "permanent") {
    return DeviationFamily::kPermanentDefection;
  }
  throw FormatError("unknown deviation family '" + text +
                    "' (expected default or permanent_defection)");
}

std::vector<StrategyMachine> deviation_machines(DeviationFamily family, std::size_t n_players,
                                                std::size_t me) {
  std::vector<StrategyMachine> out;
  out.push_back(constant_machine(kDefect));
  if (family == DeviationFamily::kPermanentDefection) return out;
  out.push_back(defect_once_then_tit_for_tat(n_players, me));
  for (std::size_t k = 1; k <= kMaxBurst; ++k) out.push_back(defect_first_k_machine(k));
  return out;
}

EquilibriumVerdict check_against_deviations(const Supergame& supergame,
                                            std::span<const StrategyMachine> machines,
                                            DeviationFamily family) {
  const std::size_t n = supergame.num_players();
  EquilibriumVerdict verdict;
  for (std::size_t i = 0; i < n; ++i) verdict.values.push_back(discounted_value(supergame, machines, i));

  std::vector<StrategyMachine> trial(machines.begin(), machines.end());
  for (std::size_t i = 0; i < n; ++i) {
    for (auto& deviation : deviation_machines(family, n, i)) {
      trial[i] = deviation;
      Deviation d{i, deviation.name(), discounted_value(supergame, trial, i), 0};
      d.gain = d.value - verdict.values[i];
      if (!verdict.binding_deviation || d.gain > verdict.binding_deviation->gain) {
        verdict.binding_deviation = d;
      }
      verdict.evaluated.push_back(std::move(d));
    }
    trial[i] = machines[i];
  }
  verdict.is_equilibrium = !verdict.binding_deviation || verdict.binding_deviation->gain <= 0;
  verdict.weak = verdict.is_equilibrium && verdict.binding_deviation &&
                 verdict.binding_deviation->gain == 0;
  return verdict;
}

Number taylor_threshold(const PdSchedule& schedule) {
  require_valid_schedule(schedule);
  const std::size_t top = schedule.n_players - 1;
  return (schedule.g[top] - schedule.f[top]) / (schedule.g[top] - schedule.g[0]);
}

EquilibriumVerdict check_conditional_cooperation(const PdSchedule& schedule,
                                                 const std::vector<Number>& discounts,
                                                 DeviationFamily family) {
  const Supergame supergame(stage_game(schedule), discounts);
  const auto machines = all_tit_for_tat(schedule.n_players);
  return check_against_deviations(supergame, machines, family);
}

Number permanent_defection_gain(const PdSchedule& schedule, const Number& alpha) {
  const Supergame supergame(stage_game(schedule), alpha);
  auto machines = all_tit_for_tat(schedule.n_players);
  const Number cooperative = discounted_value(supergame, machines, 0);
  machines[0] = constant_machine(kDefect);
  return discounted_value(supergame, machines, 0) - cooperative;
}

double critical_alpha_numeric(const PdSchedule& schedule, double tolerance) {
  require_valid_schedule(schedule);
  // The gain is positive near alpha = 0 and decreasing in alpha.
  double lo = 0.0;
  double hi = 1.0;
  while (hi - lo > tolerance) {
    const double mid = 0.5 * (lo + hi);
    if (permanent_defection_gain(schedule, Number(mid)) > 0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace netgame
