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

#ifndef NETGAME_ADOPTION_HPP_
#define NETGAME_ADOPTION_HPP_

#include <optional>
#include <string>
#include <vector>

#include "netgame/game.hpp"
#include "netgame/topology.hpp"

namespace netgame {

// Strategy indices of the stag-hunt adoption game.
struct StagHuntAction {
  static constexpr std::size_t kAdopt = 0;
  static constexpr std::size_t kDefect = 1;
};

// Strategy indices of the insurance game; kInsure adopts with insurance.
struct InsuranceAction {
  static constexpr std::size_t kAdopt = 0;
  static constexpr std::size_t kInsure = 1;
  static constexpr std::size_t kDefect = 2;
};

// Per-player benefit beta_i and investment cost gamma_i of adopting.
struct AdoptionParams {
  std::vector<Number> beta;
  std::vector<Number> gamma;

  static AdoptionParams Uniform(std::size_t n_players, const Number& beta, const Number& gamma);

  std::size_t n_players() const { return beta.size(); }
  // Throws ParameterError unless gamma_i > 0 and beta_i - gamma_i > 0.
  void Validate() const;
};

// Per-player premium epsilon_i and reimbursement delta_i paid when
// adoption fails.
struct InsuranceParams {
  std::vector<Number> epsilon;
  std::vector<Number> delta;

  static InsuranceParams Uniform(std::size_t n_players, const Number& epsilon,
                                 const Number& delta);
  // delta_i = beta_i: the policy covers the benefit of universal adoption.
  static InsuranceParams CoveringBenefit(const AdoptionParams& adoption, const Number& epsilon);

  // Throws ParameterError unless epsilon_i > 0 and
  // delta_i - gamma_i - epsilon_i > 0.
  void Validate(const AdoptionParams& adoption) const;
};

StrategicGame stag_hunt_game(const AdoptionParams& params);

StrategicGame insurance_game(const AdoptionParams& params, const InsuranceParams& insurance);

// An adopter's payoff is beta_i * (c_i / N)^p - gamma_i, with c_i the size
// of its component among adopters in `graph`; defectors get 0.
StrategicGame component_adoption_game(const Graph& graph, const AdoptionParams& params,
                                      const Number& exponent);

struct LedgerResult {
  Number premiums_collected;
  Number reimbursements_paid;
  Number net;
};

LedgerResult insurer_ledger(const AdoptionParams& params, const InsuranceParams& insurance,
                            const Profile& profile);

// Pointwise check of the three steps behind uniqueness of all-A in the
// insurance game, over every profile:
//  1. each D-player in a profile containing D strictly gains by B;
//  2. each B-player in a D-free profile strictly gains by A;
//  3. all-A admits no profitable unilateral deviation.
struct InsuranceProofCheck {
  bool defectors_improve_by_insuring = true;
  bool insured_improve_by_adopting = true;
  bool all_adopt_unimprovable = true;
  std::uint64_t profiles_checked = 0;
  std::optional<std::string> first_failure;

  bool holds() const {
    return defectors_improve_by_insuring && insured_improve_by_adopting && all_adopt_unimprovable;
  }
};

InsuranceProofCheck verify_insurance_proof_steps(const AdoptionParams& params,
                                                 const InsuranceParams& insurance,
                                                 std::uint64_t budget = kDefaultEnumerationBudget);

}  // namespace netgame

#endif  // NETGAME_ADOPTION_HPP_
