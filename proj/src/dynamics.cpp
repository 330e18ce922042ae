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

#include "netgame/dynamics.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <thread>
#include <utility>

#include "netgame/errors.hpp"

namespace netgame {
namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t run_seed(std::uint64_t seed, std::uint64_t run) {
  return splitmix64(seed ^ splitmix64(run + 1));
}

// Keeps the current strategy when it is already a best response.
std::optional<std::size_t> improving_move(const StrategicGame& game, const Profile& profile,
                                          std::size_t player) {
  const auto best = best_responses(game, profile, player);
  if (std::find(best.begin(), best.end(), profile[player]) != best.end()) return std::nullopt;
  return best.front();
}

DynamicsPath run_sequential(const StrategicGame& game, const Profile& initial,
                            const DynamicsConfig& config, std::size_t max_steps) {
  const std::size_t n = game.num_players();
  DynamicsPath path;
  path.profiles.push_back(initial);
  Profile current = initial;

  std::mt19937_64 rng(config.seed);
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::size_t cursor = 0;
  if (config.order == UpdateOrder::kRandom) std::shuffle(order.begin(), order.end(), rng);

  std::set<std::pair<Profile, std::size_t>> visited;
  while (true) {
    if (is_pure_nash(game, current)) {
      path.terminal_kind = TerminalKind::kNash;
      return path;
    }
    if (path.steps_taken >= max_steps) {
      path.terminal_kind = TerminalKind::kBudgetExhausted;
      return path;
    }
    const std::size_t player = order[cursor];
    if (config.order == UpdateOrder::kFixed && !visited.emplace(current, player).second) {
      path.terminal_kind = TerminalKind::kCycle;
      return path;
    }
    ++path.steps_taken;
    if (const auto move = improving_move(game, current, player)) {
      path.updates.push_back({path.steps_taken, player, current[player], *move});
      current[player] = *move;
      ++path.updates_applied;
      path.profiles.push_back(current);
    }
    if (++cursor == n) {
      cursor = 0;
      if (config.order == UpdateOrder::kRandom) std::shuffle(order.begin(), order.end(), rng);
    }
  }
}

DynamicsPath run_simultaneous(const StrategicGame& game, const Profile& initial,
                              std::size_t max_steps) {
  DynamicsPath path;
  path.profiles.push_back(initial);
  Profile current = initial;
  std::set<Profile> visited{initial};
  while (true) {
    if (is_pure_nash(game, current)) {
      path.terminal_kind = TerminalKind::kNash;
      return path;
    }
    if (path.steps_taken >= max_steps) {
      path.terminal_kind = TerminalKind::kBudgetExhausted;
      return path;
    }
    ++path.steps_taken;
    Profile next = current;
    for (std::size_t i = 0; i < game.num_players(); ++i) {
      if (const auto move = improving_move(game, current, i)) {
        path.updates.push_back({path.steps_taken, i, current[i], *move});
        next[i] = *move;
        ++path.updates_applied;
      }
    }
    current = std::move(next);
    path.profiles.push_back(current);
    if (!visited.insert(current).second) {
      path.terminal_kind = TerminalKind::kCycle;
      return path;
    }
  }
}

}  // namespace

std::string to_string(UpdateOrder order) {
  switch (order) {
    case UpdateOrder::kFixed: return "fixed";
    case UpdateOrder::kRandom: return "random";
    case UpdateOrder::kSimultaneous: return "simultaneous";
  }
  return "unknown";
}

std::string to_string(TerminalKind kind) {
  switch (kind) {
    case TerminalKind::kNash: return "nash";
    case TerminalKind::kCycle: return "cycle";
    case TerminalKind::kBudgetExhausted: return "budget_exhausted";
  }
  return "unknown";
}

UpdateOrder parse_update_order(const std::string& text) {
  if (text == "fixed") return UpdateOrder::kFixed;
  if (text == "random") return UpdateOrder::kRandom;
  if (text == "simultaneous") return UpdateOrder::kSimultaneous;
  throw FormatError("unknown update order '" + text + "' (expected fixed, random or simultaneous)");
}

std::size_t default_max_steps(const StrategicGame& game) {
  std::size_t widest = 0;
  for (std::size_t i = 0; i < game.num_players(); ++i) {
    widest = std::max(widest, game.num_strategies(i));
  }
  return 4 * game.num_players() * widest;
}

DynamicsPath run_dynamics(const StrategicGame& game, const Profile& initial,
                          const DynamicsConfig& config) {
  game.Validate(initial);
  const std::size_t max_steps = config.max_steps == 0 ? default_max_steps(game) : config.max_steps;
  if (config.order == UpdateOrder::kSimultaneous) return run_simultaneous(game, initial, max_steps);
  return run_sequential(game, initial, config, max_steps);
}

std::uint64_t CensusResult::CountOf(const Profile& terminal) const {
  std::uint64_t count = 0;
  for (const auto& entry : entries) {
    if (entry.terminal == terminal && entry.kind == TerminalKind::kNash) count += entry.count;
  }
  return count;
}

CensusResult basin_census(const StrategicGame& game, const std::vector<Profile>& initials,
                          const DynamicsConfig& dynamics, unsigned threads) {
  std::vector<std::pair<Profile, TerminalKind>> outcomes(initials.size());
  auto work = [&](std::size_t begin, std::size_t end) {
    for (std::size_t r = begin; r < end; ++r) {
      DynamicsConfig config = dynamics;
      config.seed = run_seed(dynamics.seed, r);
      const DynamicsPath path = run_dynamics(game, initials[r], config);
      outcomes[r] = {path.profiles.back(), path.terminal_kind};
    }
  };
  threads = std::max(1U, threads);
  if (threads == 1 || initials.size() < 2 * threads) {
    work(0, initials.size());
  } else {
    std::vector<std::thread> pool;
    const std::size_t chunk = (initials.size() + threads - 1) / threads;
    for (std::size_t begin = 0; begin < initials.size(); begin += chunk) {
      pool.emplace_back(work, begin, std::min(initials.size(), begin + chunk));
    }
    for (auto& t : pool) t.join();
  }

  std::map<std::pair<Profile, TerminalKind>, std::uint64_t> tally;
  for (const auto& outcome : outcomes) ++tally[outcome];
  CensusResult result;
  result.runs = initials.size();
  for (const auto& [key, count] : tally) result.entries.push_back({key.first, key.second, count});
  return result;
}

CensusResult basin_census(const StrategicGame& game, const CensusConfig& config) {
  std::vector<Profile> initials;
  if (config.mode == CensusMode::kExhaustive) {
    const std::uint64_t count = game.profile_count();
    if (count > config.budget) throw BudgetExceeded(count, config.budget);
    Profile profile = game.FirstProfile();
    do {
      initials.push_back(profile);
    } while (game.NextProfile(profile));
  } else {
    if (config.samples == 0) throw PreconditionError("Monte Carlo census needs samples >= 1");
    initials.reserve(config.samples);
    for (std::uint64_t r = 0; r < config.samples; ++r) {
      std::mt19937_64 rng(splitmix64(run_seed(config.dynamics.seed, r)));
      Profile profile(game.num_players());
      for (std::size_t i = 0; i < profile.size(); ++i) {
        std::uniform_int_distribution<std::size_t> pick(0, game.num_strategies(i) - 1);
        profile[i] = pick(rng);
      }
      initials.push_back(std::move(profile));
    }
  }
  CensusResult result = basin_census(game, initials, config.dynamics, config.threads);
  result.mode = config.mode;
  return result;
}

std::string census_csv(const StrategicGame& game, const CensusResult& census) {
  std::ostringstream out;
  out << "terminal_profile,count,fraction\n";
  for (const auto& entry : census.entries) {
    std::string label = game.Label(entry.terminal);
    if (entry.kind != TerminalKind::kNash) label += " [" + to_string(entry.kind) + "]";
    char fraction[32];
    std::snprintf(fraction, sizeof fraction, "%.6f",
                  static_cast<double>(entry.count) / static_cast<double>(census.runs));
    out << '"' << label << '"' << ',' << entry.count << ',' << fraction << '\n';
  }
  return out.str();
}

PredictionComparison compare_prediction(const StrategicGame& game, const CensusResult& census) {
  if (game.num_players() != 2) throw PreconditionError("prediction comparison needs two players");
  const EquilibriumReport report = enumerate_pure_nash(game);
  std::vector<Profile> strict;
  for (std::size_t k = 0; k < report.equilibria.size(); ++k) {
    if (report.strict[k]) strict.push_back(report.equilibria[k]);
  }
  if (strict.size() != 2) {
    throw PreconditionError("prediction comparison needs exactly two strict equilibria, found " +
                            std::to_string(strict.size()));
  }
  PredictionComparison cmp;
  cmp.first = strict[0];
  cmp.second = strict[1];
  cmp.risk = risk_dominance_2p(game, cmp.first, cmp.second);
  cmp.first_basin = census.CountOf(cmp.first);
  cmp.second_basin = census.CountOf(cmp.second);
  if (cmp.first_basin > cmp.second_basin) cmp.largest_basin = cmp.first;
  if (cmp.second_basin > cmp.first_basin) cmp.largest_basin = cmp.second;
  switch (cmp.risk.winner) {
    case RiskWinner::kFirst:
      cmp.risk_dominant = cmp.first;
      cmp.agree = cmp.first_basin >= cmp.second_basin;
      break;
    case RiskWinner::kSecond:
      cmp.risk_dominant = cmp.second;
      cmp.agree = cmp.second_basin >= cmp.first_basin;
      break;
    case RiskWinner::kTie:
      cmp.agree = true;
      break;
  }
  return cmp;
}

}  // namespace netgame
