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

#ifndef NETGAME_DYNAMICS_HPP_
#define NETGAME_DYNAMICS_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "netgame/game.hpp"

namespace netgame {

// kFixed and kRandom revise one player at a time (round-robin from player
// 0, or a seeded shuffle per round). kSimultaneous lets every player
// best-respond to the same profile in each step.
enum class UpdateOrder { kFixed, kRandom, kSimultaneous };

enum class TerminalKind { kNash, kCycle, kBudgetExhausted };

std::string to_string(UpdateOrder order);
std::string to_string(TerminalKind kind);
UpdateOrder parse_update_order(const std::string& text);

// A player only moves when its current strategy is not a best response,
// and then to the lowest-index best response.
struct DynamicsConfig {
  UpdateOrder order = UpdateOrder::kFixed;
  // 0 selects 4 * N * (largest strategy-set size).
  std::size_t max_steps = 0;
  std::uint64_t seed = 0;
};

struct StrategyUpdate {
  std::size_t step = 0;
  std::size_t player = 0;
  std::size_t from = 0;
  std::size_t to = 0;
};

struct DynamicsPath {
  // Initial profile followed by the profile after every applied step.
  std::vector<Profile> profiles;
  TerminalKind terminal_kind = TerminalKind::kBudgetExhausted;
  std::size_t updates_applied = 0;
  std::size_t steps_taken = 0;
  std::vector<StrategyUpdate> updates;
};

std::size_t default_max_steps(const StrategicGame& game);

DynamicsPath run_dynamics(const StrategicGame& game, const Profile& initial,
                          const DynamicsConfig& config);

enum class CensusMode { kExhaustive, kMonteCarlo };

struct CensusConfig {
  CensusMode mode = CensusMode::kExhaustive;
  std::uint64_t samples = 1000;  // Monte Carlo only
  std::uint64_t budget = kDefaultEnumerationBudget;
  DynamicsConfig dynamics;
  unsigned threads = 1;
};

struct CensusEntry {
  Profile terminal;
  TerminalKind kind = TerminalKind::kNash;
  std::uint64_t count = 0;
};

struct CensusResult {
  CensusMode mode = CensusMode::kExhaustive;
  std::uint64_t runs = 0;
  // Ordered by terminal profile, then kind.
  std::vector<CensusEntry> entries;

  std::uint64_t CountOf(const Profile& terminal) const;
};

// Runs the dynamic from every profile (exhaustive; refuses above the
// budget) or from `samples` uniformly drawn profiles. Run r uses a
// generator derived from (seed, r) only, so results do not depend on
// threading.
CensusResult basin_census(const StrategicGame& game, const CensusConfig& config);

CensusResult basin_census(const StrategicGame& game, const std::vector<Profile>& initials,
                          const DynamicsConfig& dynamics, unsigned threads = 1);

// Columns: terminal_profile,count,fraction.
std::string census_csv(const StrategicGame& game, const CensusResult& census);

struct PredictionComparison {
  Profile first;
  Profile second;
  RiskDominanceVerdict risk;
  std::uint64_t first_basin = 0;
  std::uint64_t second_basin = 0;
  std::optional<Profile> risk_dominant;  // empty on a risk tie
  std::optional<Profile> largest_basin;  // empty on a basin tie
  bool agree = false;
};

// For a two-player game with exactly two strict equilibria: does the
// risk-dominant equilibrium have a weakly largest basin?
PredictionComparison compare_prediction(const StrategicGame& game, const CensusResult& census);

}  // namespace netgame

#endif  // NETGAME_DYNAMICS_HPP_
