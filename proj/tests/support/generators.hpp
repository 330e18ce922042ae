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

#ifndef NETGAME_TESTS_SUPPORT_GENERATORS_HPP_
#define NETGAME_TESTS_SUPPORT_GENERATORS_HPP_

#include <random>
#include <vector>

#include "netgame/adoption.hpp"
#include "netgame/game.hpp"
#include "netgame/pd_game.hpp"
#include "netgame/supergame.hpp"

// Hand-rolled generators for the property tests. Values are small
// rationals so that ties and exact comparisons are exercised.
namespace netgame::testing {

inline Number random_rational(std::mt19937_64& rng, int lo, int hi, int max_den = 4) {
  std::uniform_int_distribution<int> den_dist(1, max_den);
  const int den = den_dist(rng);
  std::uniform_int_distribution<int> num_dist(lo * den, hi * den);
  return Number(num_dist(rng), den);
}

inline StrategicGame random_table_game(std::mt19937_64& rng, std::size_t players,
                                       std::size_t max_strategies, int lo = -3, int hi = 3) {
  std::uniform_int_distribution<std::size_t> size_dist(1, max_strategies);
  std::uniform_int_distribution<int> payoff_dist(lo, hi);
  std::vector<std::vector<std::string>> sets(players);
  for (auto& set : sets) {
    const std::size_t k = size_dist(rng);
    for (std::size_t j = 0; j < k; ++j) set.push_back("s" + std::to_string(j));
  }
  std::map<Profile, PayoffVector> table;
  Profile profile(players, 0);
  while (true) {
    PayoffVector payoff;
    for (std::size_t i = 0; i < players; ++i) payoff.push_back(payoff_dist(rng));
    table[profile] = payoff;
    std::size_t i = players;
    while (i-- > 0) {
      if (++profile[i] < sets[i].size()) break;
      profile[i] = 0;
    }
    if (i == static_cast<std::size_t>(-1)) break;
  }
  return StrategicGame::FromTable(sets, table);
}

// Rejection-free construction of a valid PD schedule: pick g_0, then
// f_{N-1} above g_0, g_k above both f_k and g_0.
inline PdSchedule random_schedule(std::mt19937_64& rng, std::size_t n) {
  PdSchedule schedule;
  schedule.n_players = n;
  schedule.f.resize(n);
  schedule.g.resize(n);
  const Number g0 = random_rational(rng, 0, 20);
  schedule.f[n - 1] = g0 + random_rational(rng, 1, 30);
  for (std::size_t k = 0; k + 1 < n; ++k) schedule.f[k] = random_rational(rng, -10, 40);
  schedule.g[0] = g0;
  if (schedule.f[0] >= g0) schedule.f[0] = g0 - random_rational(rng, 1, 5);
  for (std::size_t k = 1; k < n; ++k) {
    const Number floor = schedule.f[k] > g0 ? schedule.f[k] : g0;
    schedule.g[k] = floor + random_rational(rng, 1, 30);
  }
  return schedule;
}

inline AdoptionParams random_adoption(std::mt19937_64& rng, std::size_t n) {
  AdoptionParams params;
  for (std::size_t i = 0; i < n; ++i) {
    const Number gamma = random_rational(rng, 1, 20);
    params.gamma.push_back(gamma);
    params.beta.push_back(gamma + random_rational(rng, 1, 30));
  }
  return params;
}

// Premium below the net benefit (so insuring pays when adoption
// succeeds) and reimbursement with delta - gamma - epsilon > 0.
inline InsuranceParams random_insurance(std::mt19937_64& rng, const AdoptionParams& adoption) {
  InsuranceParams insurance;
  for (std::size_t i = 0; i < adoption.n_players(); ++i) {
    const Number net = adoption.beta[i] - adoption.gamma[i];
    Number epsilon = net * random_rational(rng, 1, 9, 1) / 10;
    insurance.epsilon.push_back(epsilon);
    insurance.delta.push_back(adoption.gamma[i] + epsilon + random_rational(rng, 1, 30));
  }
  return insurance;
}

// Random finite-state machine over `actions` actions that reacts to the
// observed profile through a fixed random lookup keyed by (state, hash).
inline StrategyMachine random_machine(std::mt19937_64& rng, std::size_t actions,
                                      std::size_t max_states) {
  std::uniform_int_distribution<std::size_t> states_dist(1, max_states);
  const std::size_t states = states_dist(rng);
  std::uniform_int_distribution<std::size_t> action_dist(0, actions - 1);
  std::uniform_int_distribution<std::size_t> state_dist(0, states - 1);
  std::vector<std::size_t> emit(states);
  for (auto& a : emit) a = action_dist(rng);
  constexpr std::size_t kBuckets = 8;
  std::vector<std::size_t> table(states * kBuckets);
  for (auto& next : table) next = state_dist(rng);
  return StrategyMachine("random", emit, state_dist(rng),
                         [table, states](std::size_t state, const Profile& observed) {
                           std::size_t h = 0;
                           for (std::size_t a : observed) h = h * 31 + a + 1;
                           (void)states;
                           return table[state * kBuckets + h % kBuckets];
                         });
}

}  // namespace netgame::testing

#endif  // NETGAME_TESTS_SUPPORT_GENERATORS_HPP_
