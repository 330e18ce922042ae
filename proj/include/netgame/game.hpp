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

#ifndef NETGAME_GAME_HPP_
#define NETGAME_GAME_HPP_

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "netgame/number.hpp"

namespace netgame {

// One strategy index per player. Index j of player i names
// game.strategies(i)[j].
using Profile = std::vector<std::size_t>;
using PayoffVector = std::vector<Number>;
using PayoffRule = std::function<PayoffVector(const Profile&)>;

inline constexpr std::uint64_t kDefaultEnumerationBudget = 10'000'000;

// Finite N-player game in strategic form. Payoffs come from a rule
// attached by the constructing module, or from an explicit table.
// Immutable after construction; copies share the payoff rule.
class StrategicGame {
 public:
  StrategicGame(std::vector<std::vector<std::string>> strategy_sets, PayoffRule rule,
                std::string name = "game");

  // Every profile of the cartesian product must be present in `table`.
  static StrategicGame FromTable(std::vector<std::vector<std::string>> strategy_sets,
                                 std::map<Profile, PayoffVector> table,
                                 std::string name = "table game");

  std::size_t num_players() const { return strategy_sets_.size(); }
  std::size_t num_strategies(std::size_t player) const;
  const std::vector<std::string>& strategies(std::size_t player) const;
  const std::string& name() const { return name_; }

  // Product of strategy-set sizes, saturating at UINT64_MAX.
  std::uint64_t profile_count() const;

  // Throws GameError naming the first offending player.
  void Validate(const Profile& profile) const;

  PayoffVector Payoff(const Profile& profile) const;

  Profile ProfileFromLabels(const std::vector<std::string>& labels) const;
  std::size_t StrategyIndex(std::size_t player, const std::string& label) const;
  std::string Label(const Profile& profile) const;

  // Lexicographic odometer over strategy indices (player 0 most
  // significant). Returns false after the last profile.
  Profile FirstProfile() const { return Profile(num_players(), 0); }
  bool NextProfile(Profile& profile) const;

 private:
  std::vector<std::vector<std::string>> strategy_sets_;
  std::shared_ptr<const PayoffRule> rule_;
  std::string name_;
};

PayoffVector payoff_of(const StrategicGame& game, const Profile& profile);

// All strategies maximizing `player`'s payoff against profile's other
// entries, in increasing index order.
std::vector<std::size_t> best_responses(const StrategicGame& game, const Profile& profile,
                                        std::size_t player);

bool is_pure_nash(const StrategicGame& game, const Profile& profile);

// Every unilateral deviation is strictly worse.
bool is_strict_nash(const StrategicGame& game, const Profile& profile);

struct EquilibriumReport {
  std::vector<Profile> equilibria;
  // strict[k] is false when equilibria[k] is only a weak equilibrium.
  std::vector<bool> strict;
  // Equilibria not Pareto-dominated by any other equilibrium.
  std::vector<Profile> pareto_dominant;
  std::uint64_t search_space_size = 0;
};

EquilibriumReport enumerate_pure_nash(const StrategicGame& game,
                                      std::uint64_t budget = kDefaultEnumerationBudget);

enum class ParetoRelation { kFirstDominates, kSecondDominates, kEqual, kIncomparable };

ParetoRelation pareto_relation(const StrategicGame& game, const Profile& a, const Profile& b);

std::string to_string(ParetoRelation relation);

enum class RiskWinner { kFirst, kSecond, kTie };

struct RiskDominanceVerdict {
  RiskWinner winner = RiskWinner::kTie;
  Number nash_product_first;
  Number nash_product_second;
};

// Two-player risk dominance between strict equilibria via Nash products of
// the deviation losses toward the other equilibrium.
RiskDominanceVerdict risk_dominance_2p(const StrategicGame& game, const Profile& first,
                                       const Profile& second);

}  // namespace netgame

#endif  // NETGAME_GAME_HPP_
