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

#include "netgame/adoption.hpp"

#include <cmath>

#include "netgame/errors.hpp"

namespace netgame {

AdoptionParams AdoptionParams::Uniform(std::size_t n_players, const Number& beta,
                                       const Number& gamma) {
  return AdoptionParams{std::vector<Number>(n_players, beta), std::vector<Number>(n_players, gamma)};
}

void AdoptionParams::Validate() const {
  if (beta.empty()) throw ParameterError("adoption game needs at least one player");
  if (gamma.size() != beta.size()) {
    throw ParameterError("beta and gamma must have one entry per player");
  }
  for (std::size_t i = 0; i < beta.size(); ++i) {
    if (!(gamma[i] > 0)) {
      throw ParameterError("player " + std::to_string(i) + ": investment cost gamma must be > 0");
    }
    if (!(beta[i] - gamma[i] > 0)) {
      throw ParameterError("player " + std::to_string(i) +
                           ": net benefit beta - gamma must be > 0");
    }
  }
}

InsuranceParams InsuranceParams::Uniform(std::size_t n_players, const Number& epsilon,
                                         const Number& delta) {
  return InsuranceParams{std::vector<Number>(n_players, epsilon),
                         std::vector<Number>(n_players, delta)};
}

InsuranceParams InsuranceParams::CoveringBenefit(const AdoptionParams& adoption,
                                                 const Number& epsilon) {
  return InsuranceParams{std::vector<Number>(adoption.n_players(), epsilon), adoption.beta};
}

void InsuranceParams::Validate(const AdoptionParams& adoption) const {
  adoption.Validate();
  if (epsilon.size() != adoption.n_players() || delta.size() != adoption.n_players()) {
    throw ParameterError("epsilon and delta must have one entry per player");
  }
  for (std::size_t i = 0; i < epsilon.size(); ++i) {
    if (!(epsilon[i] > 0)) {
      throw ParameterError("player " + std::to_string(i) + ": premium epsilon must be > 0");
    }
    if (!(delta[i] - adoption.gamma[i] - epsilon[i] > 0)) {
      throw ParameterError("player " + std::to_string(i) +
                           ": insured payoff on failure delta - gamma - epsilon must be > 0");
    }
  }
}

namespace {

// q(s_{-i}) = 1 iff no other player defects.
bool others_all_deploy(const Profile& profile, std::size_t me, std::size_t defect_index) {
  for (std::size_t j = 0; j < profile.size(); ++j) {
    if (j != me && profile[j] == defect_index) return false;
  }
  return true;
}

}  // namespace

StrategicGame stag_hunt_game(const AdoptionParams& params) {
  params.Validate();
  const std::size_t n = params.n_players();
  return StrategicGame(
      std::vector<std::vector<std::string>>(n, {"A", "D"}),
      [params](const Profile& profile) {
        PayoffVector payoff(profile.size());
        for (std::size_t i = 0; i < profile.size(); ++i) {
          if (profile[i] == StagHuntAction::kDefect) {
            payoff[i] = 0;
          } else if (others_all_deploy(profile, i, StagHuntAction::kDefect)) {
            payoff[i] = params.beta[i] - params.gamma[i];
          } else {
            payoff[i] = -params.gamma[i];
          }
        }
        return payoff;
      },
      "stag_hunt(N=" + std::to_string(n) + ")");
}

StrategicGame insurance_game(const AdoptionParams& params, const InsuranceParams& insurance) {
  insurance.Validate(params);
  const std::size_t n = params.n_players();
  return StrategicGame(
      std::vector<std::vector<std::string>>(n, {"A", "B", "D"}),
      [params, insurance](const Profile& profile) {
        PayoffVector payoff(profile.size());
        for (std::size_t i = 0; i < profile.size(); ++i) {
          const bool adopted = others_all_deploy(profile, i, InsuranceAction::kDefect);
          switch (profile[i]) {
            case InsuranceAction::kAdopt:
              payoff[i] = adopted ? Number(params.beta[i] - params.gamma[i]) : Number(-params.gamma[i]);
              break;
            case InsuranceAction::kInsure:
              payoff[i] = adopted ? params.beta[i] - params.gamma[i] - insurance.epsilon[i]
                                  : insurance.delta[i] - params.gamma[i] - insurance.epsilon[i];
              break;
            default:
              payoff[i] = 0;
          }
        }
        return payoff;
      },
      "insurance(N=" + std::to_string(n) + ")");
}

StrategicGame component_adoption_game(const Graph& graph, const AdoptionParams& params,
                                      const Number& exponent) {
  params.Validate();
  const std::size_t n = params.n_players();
  if (graph.num_nodes() != n) {
    throw ParameterError("graph has " + std::to_string(graph.num_nodes()) +
                         " nodes but the game has " + std::to_string(n) + " players");
  }
  if (!(exponent >= 1)) throw ParameterError("component exponent must be >= 1");

  const bool exact = is_integer(exponent);
  const unsigned int_exponent = exact ? exponent.convert_to<unsigned>() : 0;
  const double real_exponent = to_double(exponent);
  auto shape = [=](const Number& fraction) -> Number {
    if (exact) return pow(fraction, int_exponent);
    return Number(std::pow(to_double(fraction), real_exponent));
  };

  return StrategicGame(
      std::vector<std::vector<std::string>>(n, {"A", "D"}),
      [graph, params, shape, n](const Profile& profile) {
        std::vector<std::size_t> adopters;
        for (std::size_t i = 0; i < profile.size(); ++i) {
          if (profile[i] == StagHuntAction::kAdopt) adopters.push_back(i);
        }
        const auto components = adopter_components(graph, adopters);
        PayoffVector payoff(profile.size());
        for (std::size_t i : adopters) {
          const Number fraction(components.at(i).size, n);
          payoff[i] = params.beta[i] * shape(fraction) - params.gamma[i];
        }
        return payoff;
      },
      "component_adoption(N=" + std::to_string(n) + ")");
}

LedgerResult insurer_ledger(const AdoptionParams& params, const InsuranceParams& insurance,
                            const Profile& profile) {
  insurance.Validate(params);
  if (profile.size() != params.n_players()) {
    throw GameError("profile length does not match the number of players");
  }
  bool adoption_failed = false;
  for (std::size_t i = 0; i < profile.size(); ++i) {
    if (profile[i] > InsuranceAction::kDefect) {
      throw GameError("player " + std::to_string(i) + ": strategy index out of range");
    }
    adoption_failed = adoption_failed || profile[i] == InsuranceAction::kDefect;
  }
  LedgerResult ledger;
  for (std::size_t i = 0; i < profile.size(); ++i) {
    if (profile[i] != InsuranceAction::kInsure) continue;
    ledger.premiums_collected += insurance.epsilon[i];
    if (adoption_failed) ledger.reimbursements_paid += insurance.delta[i];
  }
  ledger.net = ledger.premiums_collected - ledger.reimbursements_paid;
  return ledger;
}

InsuranceProofCheck verify_insurance_proof_steps(const AdoptionParams& params,
                                                 const InsuranceParams& insurance,
                                                 std::uint64_t budget) {
  const StrategicGame game = insurance_game(params, insurance);
  if (game.profile_count() > budget) throw BudgetExceeded(game.profile_count(), budget);

  InsuranceProofCheck check;
  auto fail = [&](bool& flag, const Profile& profile, std::size_t player, const char* what) {
    flag = false;
    if (!check.first_failure) {
      check.first_failure = game.Label(profile) + ", player " + std::to_string(player) + ": " + what;
    }
  };

  Profile profile = game.FirstProfile();
  do {
    ++check.profiles_checked;
    const PayoffVector base = game.Payoff(profile);
    bool has_defector = false;
    bool has_insured = false;
    for (std::size_t a : profile) {
      has_defector = has_defector || a == InsuranceAction::kDefect;
      has_insured = has_insured || a == InsuranceAction::kInsure;
    }
    for (std::size_t i = 0; i < profile.size(); ++i) {
      Profile deviation = profile;
      if (has_defector && profile[i] == InsuranceAction::kDefect) {
        deviation[i] = InsuranceAction::kInsure;
        if (!(game.Payoff(deviation)[i] > base[i])) {
          fail(check.defectors_improve_by_insuring, profile, i, "D does not gain by B");
        }
      } else if (!has_defector && has_insured && profile[i] == InsuranceAction::kInsure) {
        deviation[i] = InsuranceAction::kAdopt;
        if (!(game.Payoff(deviation)[i] > base[i])) {
          fail(check.insured_improve_by_adopting, profile, i, "B does not gain by A");
        }
      }
    }
  } while (game.NextProfile(profile));

  const Profile all_adopt(params.n_players(), InsuranceAction::kAdopt);
  if (!is_pure_nash(game, all_adopt)) {
    for (std::size_t i = 0; i < all_adopt.size(); ++i) {
      const auto best = best_responses(game, all_adopt, i);
      if (best.front() != InsuranceAction::kAdopt) {
        fail(check.all_adopt_unimprovable, all_adopt, i, "all-A is improvable");
      }
    }
  }
  return check;
}

}  // namespace netgame
