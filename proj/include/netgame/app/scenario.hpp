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

#ifndef NETGAME_APP_SCENARIO_HPP_
#define NETGAME_APP_SCENARIO_HPP_

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "netgame/adoption.hpp"
#include "netgame/conditional_cooperation.hpp"
#include "netgame/dynamics.hpp"
#include "netgame/pd_game.hpp"
#include "netgame/topology.hpp"

namespace netgame::app {

enum class ScenarioKind { kPdStage, kPdSupergame, kStagHunt, kInsurance, kComponentAdoption };
enum class Analysis { kNash, kSupergameCheck, kDynamics, kCensus, kRisk };

std::string to_string(ScenarioKind kind);
std::string to_string(Analysis analysis);
Analysis parse_analysis(const std::string& text);

// A scenario file describes one game and the analysis to run on it.
//
//   {
//     "name": "fig1_supergame",
//     "kind": "pd_supergame",
//     "analysis": "supergame_check",
//     "pd": {"n_players": 2, "f": [10, 50], "g": [15, 90]},
//     "discount": "3/5",
//     "deviations": "default"
//   }
//
// Other stanzas: "stag_hunt" {n_players, beta, gamma}, "insurance"
// {epsilon, delta}, "component" {graph_file, exponent}, "dynamics"
// {update_order, max_steps, seed, initial}, "census" {mode, samples}.
// Numbers may be written as strings ("8/15", "0.6") for exact rationals.
// Per-player values accept either a scalar or an array.
struct Scenario {
  std::string name;
  ScenarioKind kind = ScenarioKind::kPdStage;
  Analysis analysis = Analysis::kNash;

  std::optional<PdSchedule> schedule;
  std::vector<Number> discounts;
  DeviationFamily deviations = DeviationFamily::kDefault;

  std::optional<AdoptionParams> adoption;
  std::optional<InsuranceParams> insurance;

  std::optional<Graph> graph;
  std::string graph_file;
  Number exponent = 2;

  DynamicsConfig dynamics;
  std::optional<std::vector<std::string>> initial;
  CensusConfig census;

  std::string output;

  // Stage game for the PD kinds, otherwise the one-shot game itself.
  StrategicGame BuildGame() const;
};

// Invalid scenarios raise FormatError (with the offending field) or
// ParameterError.
Scenario parse_scenario(const nlohmann::json& document,
                        const std::filesystem::path& base_dir = {});

nlohmann::json load_scenario_json(const std::filesystem::path& path);

Scenario load_scenario(const std::filesystem::path& path);

// Sets a numeric field addressed by a dotted path such as
// "stag_hunt.beta" or "discount". The value is stored as text so that
// fractions stay exact.
void set_scenario_field(nlohmann::json& document, const std::string& dotted_path,
                        const std::string& value);

}  // namespace netgame::app

#endif  // NETGAME_APP_SCENARIO_HPP_
