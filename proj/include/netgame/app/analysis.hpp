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

#ifndef NETGAME_APP_ANALYSIS_HPP_
#define NETGAME_APP_ANALYSIS_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "netgame/app/scenario.hpp"

namespace netgame::app {

struct RunOptions {
  std::optional<std::uint64_t> seed;  // overrides the scenario's seed
  std::uint64_t budget = kDefaultEnumerationBudget;
};

struct CsvArtifact {
  std::string file_name;
  std::string content;
};

struct AnalysisOutput {
  std::string report;  // human-readable
  std::vector<CsvArtifact> csv;
};

// Throws BudgetExceeded when an exhaustive step is over budget.
AnalysisOutput run_analysis(const Scenario& scenario, Analysis analysis, const RunOptions& options);

// Two-player games render as a matrix; larger games as one line per profile.
std::string payoff_table(const StrategicGame& game);

// One row per grid value, in grid order. Columns:
//   param,value,ne_count,equilibria,taylor_threshold,verdict,
//   binding_deviation,binding_gain,permanent_defection_verdict,
//   risk_winner,nash_product_1,nash_product_2,basin_fractions
// Cells that do not apply to the scenario kind are left empty.
std::string sweep_csv(const nlohmann::json& base_document, const std::filesystem::path& base_dir,
                      const std::string& param, const std::vector<std::string>& grid,
                      const RunOptions& options, unsigned threads = 1);

// Built-in demonstrations: "fig1", "staghunt", "insurance".
std::string run_demo(const std::string& which);

}  // namespace netgame::app

#endif  // NETGAME_APP_ANALYSIS_HPP_
