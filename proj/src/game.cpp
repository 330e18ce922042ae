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

#include "netgame/game.hpp"

#include <limits>
#include <utility>

#include "netgame/errors.hpp"

namespace netgame {

StrategicGame::StrategicGame(std::vector<std::vector<std::string>> strategy_sets,
                             PayoffRule rule, std::string name)
    : strategy_sets_(std::move(strategy_sets)),
      rule_(std::make_shared<const PayoffRule>(std::move(rule))),
      name_(std::move(name)) {
  if (strategy_sets_.empty()) throw PreconditionError("a game needs at least one player");
  for (std::size_t i = 0; i < strategy_sets_.size(); ++i) {
    if (strategy_sets_[i].empty()) {
      throw PreconditionError("player " + std::to_string(i) + " has no strategies");
    }
  }
  if (!*rule_) throw PreconditionError("missing payoff rule");
}

StrategicGame StrategicGame::FromTable(std::vector<std::vector<std::string>> strategy_sets,
                                       std::map<Profile, PayoffVector> table,
                                       std::string name) {
  auto shared_table = std::make_shared<const std::map<Profile, PayoffVector>>(std::move(table));
  StrategicGame game(std::move(strategy_sets),
                     [shared_table](const Profile& profile) {
                       return shared_table->at(profile);
                     },
                     std::move(name));
  Profile profile = game.FirstProfile();
  do {
    const auto it = shared_table->find(profile);
    if (it == shared_table->end()) {
      throw PreconditionError("payoff table misses profile " + game.Label(profile));
    }
    if (it->second.size() != game.num_players()) {
      throw PreconditionError("payoff vector of wrong length at " + game.Label(profile));
    }
  } while (game.NextProfile(profile));
  return game;
}

std::size_t StrategicGame::num_strategies(std::size_t player) const {
  return strategies(player).size();
}

const std::vector<std::string>& StrategicGame::strategies(std::size_t player) const {
  if (player >= strategy_sets_.size()) {
    throw GameError("player index " + std::to_string(player) + " out of range");
  }
  return strategy_sets_[player];
}

std::uint64_t StrategicGame::profile_count() const {
  std::uint64_t count = 1;
  for (const auto& set : strategy_sets_) {
    if (count > std::numeric_limits<std::uint64_t>::max() / set.size()) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    count *= set.size();
  }
  return count;
}

void StrategicGame::Validate(const Profile& profile) const {
  if (profile.size() != num_players()) {
    throw GameError("profile has " + std::to_string(profile.size()) + " entries, game has " +
                    std::to_string(num_players()) + " players");
  }
  for (std::size_t i = 0; i < profile.size(); ++i) {
    if (profile[i] >= strategy_sets_[i].size()) {
      throw GameError("player " + std::to_string(i) + ": strategy index " +
                      std::to_string(profile[i]) + " is not in the strategy set");
    }
  }
}

PayoffVector StrategicGame::Payoff(const Profile& profile) const {
  Validate(profile);
  PayoffVector payoff = (*rule_)(profile);
  if (payoff.size() != num_players()) {
    throw PreconditionError("payoff rule returned " + std::to_string(payoff.size()) +
                            " values for " + std::to_string(num_players()) + " players");
  }
  return payoff;
}

std::size_t StrategicGame::StrategyIndex(std::size_t player, const std::string& label) const {
  const auto& set = strategies(player);
  for (std::size_t j = 0; j < set.size(); ++j) {
    if (set[j] == label) return j;
  }
  throw GameError("player " + std::to_string(player) + ": unknown strategy '" + label + "'");
}

Profile StrategicGame::ProfileFromLabels(const std::vector<std::string>& labels) const {
  if (labels.size() != num_players()) {
    throw GameError("profile has " + std::to_string(labels.size()) + " entries, game has " +
                    std::to_string(num_players()) + " players");
  }
  Profile profile(labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i) profile[i] = StrategyIndex(i, labels[i]);
  return profile;
}

std::string StrategicGame::Label(const Profile& profile) const {
  std::string out = "(";
  for (std::size_t i = 0; i < profile.size(); ++i) {
    if (i > 0) out += ",";
    if (i < strategy_sets_.size() && profile[i] < strategy_sets_[i].size()) {
      out += strategy_sets_[i][profile[i]];
    } else {
      out += "?" + std::to_string(profile[i]);
    }
  }
  return out + ")";
}

bool StrategicGame::NextProfile(Profile& profile) const {
  for (std::size_t i = profile.size(); i-- > 0;) {
    if (++profile[i] < strategy_sets_[i].size()) return true;
    profile[i] = 0;
  }
  return false;
}

PayoffVector payoff_of(const StrategicGame& game, const Profile& profile) {
  return game.Payoff(profile);
}

std::vector<std::size_t> best_responses(const StrategicGame& game, const Profile& profile,
                                        std::size_t player) {
  game.Validate(profile);
  if (player >= game.num_players()) {
    throw PreconditionError("player index " + std::to_string(player) + " out of range");
  }
  std::vector<std::size_t> best;
  Number best_value;
  Profile candidate = profile;
  for (std::size_t s = 0; s < game.num_strategies(player); ++s) {
    candidate[player] = s;
    Number value = game.Payoff(candidate)[player];
    if (best.empty() || value > best_value) {
      best.assign(1, s);
      best_value = std::move(value);
    } else if (value == best_value) {
      best.push_back(s);
    }
  }
  return best;
}

bool is_pure_nash(const StrategicGame& game, const Profile& profile) {
  for (std::size_t i = 0; i < game.num_players(); ++i) {
    const auto best = best_responses(game, profile, i);
    bool found = false;
    for (std::size_t s : best) found = found || s == profile[i];
    if (!found) return false;
  }
  return true;
}

bool is_strict_nash(const StrategicGame& game, const Profile& profile) {
  const PayoffVector base = game.Payoff(profile);
  Profile candidate = profile;
  for (std::size_t i = 0; i < game.num_players(); ++i) {
    for (std::size_t s = 0; s < game.num_strategies(i); ++s) {
      if (s == profile[i]) continue;
      candidate[i] = s;
      if (game.Payoff(candidate)[i] >= base[i]) return false;
    }
    candidate[i] = profile[i];
  }
  return true;
}

EquilibriumReport enumerate_pure_nash(const StrategicGame& game, std::uint64_t budget) {
  EquilibriumReport report;
  report.search_space_size = game.profile_count();
  if (report.search_space_size > budget) throw BudgetExceeded(report.search_space_size, budget);

  Profile profile = game.FirstProfile();
  do {
    if (is_pure_nash(game, profile)) {
      report.equilibria.push_back(profile);
      report.strict.push_back(is_strict_nash(game, profile));
    }
  } while (game.NextProfile(profile));

  for (const auto& candidate : report.equilibria) {
    bool dominated = false;
    for (const auto& other : report.equilibria) {
      if (pareto_relation(game, other, candidate) == ParetoRelation::kFirstDominates) {
        dominated = true;
        break;
      }
    }
    if (!dominated) report.pareto_dominant.push_back(candidate);
  }
  return report;
}

ParetoRelation pareto_relation(const StrategicGame& game, const Profile& a, const Profile& b) {
  const PayoffVector pa = game.Payoff(a);
  const PayoffVector pb = game.Payoff(b);
  bool a_better = false;
  bool b_better = false;
  for (std::size_t i = 0; i < pa.size(); ++i) {
    if (pa[i] > pb[i]) a_better = true;
    if (pb[i] > pa[i]) b_better = true;
  }
  if (a_better && b_better) return ParetoRelation::kIncomparable;
  if (a_better) return ParetoRelation::kFirstDominates;
  if (b_better) return ParetoRelation::kSecondDominates;
  return ParetoRelation::kEqual;
}

std::string to_string(ParetoRelation relation) {
  switch (relation) {
    case ParetoRelation::kFirstDominates: return "a_dominates";
    case ParetoRelation::kSecondDominates: return "b_dominates";
    case ParetoRelation::kEqual: return "equal";
    case ParetoRelation::kIncomparable: return "incomparable";
  }
  return "unknown";
}

RiskDominanceVerdict risk_dominance_2p(const StrategicGame& game, const Profile& first,
                                       const Profile& second) {
  if (game.num_players() != 2) {
    throw PreconditionError("risk dominance is implemented for two-player games only");
  }
  game.Validate(first);
  game.Validate(second);
  if (!is_strict_nash(game, first)) {
    throw PreconditionError(game.Label(first) + " is not a strict Nash equilibrium");
  }
  if (!is_strict_nash(game, second)) {
    throw PreconditionError(game.Label(second) + " is not a strict Nash equilibrium");
  }

  // Product over players of the loss from switching, alone, to the
  // strategy the player uses in the other equilibrium.
  auto nash_product = [&game](const Profile& at, const Profile& toward) {
    const PayoffVector base = game.Payoff(at);
    Number product = 1;
    for (std::size_t i = 0; i < 2; ++i) {
      Profile deviation = at;
      deviation[i] = toward[i];
      product *= base[i] - game.Payoff(deviation)[i];
    }
    return product;
  };

  RiskDominanceVerdict verdict;
  verdict.nash_product_first = nash_product(first, second);
  verdict.nash_product_second = nash_product(second, first);
  if (verdict.nash_product_first > verdict.nash_product_second) {
    verdict.winner = RiskWinner::kFirst;
  } else if (verdict.nash_product_second > verdict.nash_product_first) {
    verdict.winner = RiskWinner::kSecond;
  } else {
    verdict.winner = RiskWinner::kTie;
  }
  return verdict;
}

}  // namespace netgame
