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

#include "netgame/pd_game.hpp"

#include "netgame/errors.hpp"

namespace netgame {

std::string ScheduleReport::Summary() const {
  if (valid()) return "valid";
  std::string out;
  for (const auto& v : violations) {
    if (!out.empty()) out += "; ";
    out += v.message;
  }
  return out;
}

ScheduleReport validate_schedule(const PdSchedule& schedule) {
  const std::size_t n = schedule.n_players;
  if (n < 2) throw FormatError("a PD schedule needs n_players >= 2");
  if (schedule.f.size() != n || schedule.g.size() != n) {
    throw FormatError("f and g must both have n_players = " + std::to_string(n) +
                      " entries (got " + std::to_string(schedule.f.size()) + " and " +
                      std::to_string(schedule.g.size()) + ")");
  }
  ScheduleReport report;
  const auto& f = schedule.f;
  const auto& g = schedule.g;
  for (std::size_t k = 0; k < n; ++k) {
    if (!(g[k] > f[k])) {
      report.violations.push_back({1, k, "assumption 1 violated at k=" + std::to_string(k) +
                                             ": g_k=" + to_string(g[k]) + " <= f_k=" +
                                             to_string(f[k])});
    }
  }
  if (!(f[n - 1] > g[0])) {
    report.violations.push_back({2, n - 1, "assumption 2 violated: f_{N-1}=" +
                                               to_string(f[n - 1]) + " <= g_0=" +
                                               to_string(g[0])});
  }
  for (std::size_t k = 1; k < n; ++k) {
    if (!(g[k] > g[0])) {
      report.violations.push_back({3, k, "assumption 3 violated at k=" + std::to_string(k) +
                                             ": g_k=" + to_string(g[k]) + " <= g_0=" +
                                             to_string(g[0])});
    }
  }
  return report;
}

void require_valid_schedule(const PdSchedule& schedule) {
  const ScheduleReport report = validate_schedule(schedule);
  if (!report.valid()) throw PreconditionError("invalid PD schedule: " + report.Summary());
}

StrategicGame stage_game(const PdSchedule& schedule) {
  require_valid_schedule(schedule);
  const std::size_t n = schedule.n_players;
  std::vector<std::vector<std::string>> sets(n, std::vector<std::string>{"C", "D"});
  return StrategicGame(
      std::move(sets),
      [schedule](const Profile& profile) {
        std::size_t cooperators = 0;
        for (std::size_t a : profile) cooperators += a == kCooperate ? 1 : 0;
        PayoffVector payoff(profile.size());
        for (std::size_t i = 0; i < profile.size(); ++i) {
          if (profile[i] == kCooperate) {
            payoff[i] = schedule.f[cooperators - 1];
          } else {
            payoff[i] = schedule.g[cooperators];
          }
        }
        return payoff;
      },
      "pd_stage(N=" + std::to_string(n) + ")");
}

PdSchedule fig1_schedule() { return PdSchedule{2, {10, 50}, {15, 90}}; }

}  // namespace netgame
