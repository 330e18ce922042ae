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

#include "netgame/app/scenario.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "netgame/errors.hpp"

namespace netgame::app {

using netgame::to_string;

using nlohmann::json;

namespace {

[[noreturn]] void field_error(const std::string& field, const std::string& what) {
  throw FormatError("field '" + field + "': " + what);
}

Number read_number(const json& value, const std::string& field) {
  if (value.is_number_integer()) return Number(value.get<long long>());
  if (value.is_number_unsigned()) return Number(value.get<unsigned long long>());
  if (value.is_number_float()) return from_double(value.get<double>());
  if (value.is_string()) {
    try {
      return parse_number(value.get<std::string>());
    } catch (const FormatError& e) {
      field_error(field, e.what());
    }
  }
  field_error(field, "expected a number or a numeric string");
}

std::vector<Number> read_numbers(const json& value, const std::string& field) {
  if (!value.is_array()) field_error(field, "expected an array");
  std::vector<Number> out;
  for (std::size_t k = 0; k < value.size(); ++k) {
    out.push_back(read_number(value[k], field + "[" + std::to_string(k) + "]"));
  }
  return out;
}

// Scalar broadcast to all players, or one entry per player.
std::vector<Number> read_per_player(const json& value, std::size_t n, const std::string& field) {
  if (!value.is_array()) return std::vector<Number>(n, read_number(value, field));
  std::vector<Number> out = read_numbers(value, field);
  if (out.size() != n) {
    field_error(field, "expected " + std::to_string(n) + " entries, got " +
                           std::to_string(out.size()));
  }
  return out;
}

std::uint64_t read_count(const json& value, const std::string& field) {
  if (value.is_number_unsigned()) return value.get<std::uint64_t>();
  if (value.is_number_integer() && value.get<long long>() >= 0) {
    return static_cast<std::uint64_t>(value.get<long long>());
  }
  if (value.is_string()) {
    try {
      return std::stoull(value.get<std::string>());
    } catch (const std::exception&) {
    }
  }
  field_error(field, "expected a non-negative integer");
}

std::string read_string(const json& value, const std::string& field) {
  if (!value.is_string()) field_error(field, "expected a string");
  return value.get<std::string>();
}

const json& require(const json& object, const std::string& key, const std::string& context) {
  if (!object.is_object() || !object.contains(key)) {
    field_error(context.empty() ? key : context + "." + key, "missing");
  }
  return object.at(key);
}

ScenarioKind parse_kind(const std::string& text) {
  if (text == "pd_stage") return ScenarioKind::kPdStage;
  if (text == "pd_supergame") return ScenarioKind::kPdSupergame;
  if (text == "stag_hunt") return ScenarioKind::kStagHunt;
  if (text == "insurance") return ScenarioKind::kInsurance;
  if (text == "component_adoption") return ScenarioKind::kComponentAdoption;
  field_error("kind", "unknown kind '" + text + "'");
}

PdSchedule read_schedule(const json& stanza) {
  if (stanza.is_string()) {
    if (stanza.get<std::string>() == "fig1") return fig1_schedule();
    field_error("pd", "unknown named schedule '" + stanza.get<std::string>() + "'");
  }
  PdSchedule schedule;
  schedule.n_players = static_cast<std::size_t>(read_count(require(stanza, "n_players", "pd"), "pd.n_players"));
  schedule.f = read_numbers(require(stanza, "f", "pd"), "pd.f");
  schedule.g = read_numbers(require(stanza, "g", "pd"), "pd.g");
  return schedule;
}

AdoptionParams read_adoption(const json& stanza, std::optional<std::size_t> implied_players) {
  std::size_t n = 0;
  if (stanza.contains("n_players")) {
    n = static_cast<std::size_t>(read_count(stanza.at("n_players"), "stag_hunt.n_players"));
  } else if (implied_players) {
    n = *implied_players;
  } else {
    field_error("stag_hunt.n_players", "missing");
  }
  if (n == 0) field_error("stag_hunt.n_players", "must be >= 1");
  AdoptionParams params;
  params.beta = read_per_player(require(stanza, "beta", "stag_hunt"), n, "stag_hunt.beta");
  params.gamma = read_per_player(require(stanza, "gamma", "stag_hunt"), n, "stag_hunt.gamma");
  params.Validate();
  return params;
}

}  // namespace

std::string to_string(ScenarioKind kind) {
  switch (kind) {
    case ScenarioKind::kPdStage: return "pd_stage";
    case ScenarioKind::kPdSupergame: return "pd_supergame";
    case ScenarioKind::kStagHunt: return "stag_hunt";
    case ScenarioKind::kInsurance: return "insurance";
    case ScenarioKind::kComponentAdoption: return "component_adoption";
  }
  return "unknown";
}

std::string to_string(Analysis analysis) {
  switch (analysis) {
    case Analysis::kNash: return "nash";
    case Analysis::kSupergameCheck: return "supergame_check";
    case Analysis::kDynamics: return "dynamics";
    case Analysis::kCensus: return "census";
    case Analysis::kRisk: return "risk";
  }
  return "unknown";
}

Analysis parse_analysis(const std::string& text) {
  if (text == "nash") return Analysis::kNash;
  if (text == "supergame_check" || text == "supergame-check") return Analysis::kSupergameCheck;
  if (text == "dynamics") return Analysis::kDynamics;
  if (text == "census") return Analysis::kCensus;
  if (text == "risk") return Analysis::kRisk;
  field_error("analysis", "unknown analysis '" + text + "'");
}

StrategicGame Scenario::BuildGame() const {
  switch (kind) {
    case ScenarioKind::kPdStage:
    case ScenarioKind::kPdSupergame:
      return stage_game(*schedule);
    case ScenarioKind::kStagHunt:
      return stag_hunt_game(*adoption);
    case ScenarioKind::kInsurance:
      return insurance_game(*adoption, *insurance);
    case ScenarioKind::kComponentAdoption:
      return component_adoption_game(*graph, *adoption, exponent);
  }
  throw PreconditionError("unknown scenario kind");
}

Scenario parse_scenario(const json& document, const std::filesystem::path& base_dir) {
  if (!document.is_object()) throw FormatError("scenario must be a JSON object");
  static const std::vector<std::string> known = {
      "name", "kind", "analysis", "pd", "discount", "deviations", "stag_hunt", "insurance",
      "component", "dynamics", "census", "output", "description"};
  for (const auto& [key, value] : document.items()) {
    if (std::find(known.begin(), known.end(), key) == known.end()) {
      field_error(key, "unknown field");
    }
  }

  Scenario scenario;
  scenario.name = document.contains("name") ? read_string(document.at("name"), "name") : "scenario";
  scenario.kind = parse_kind(read_string(require(document, "kind", ""), "kind"));
  scenario.analysis = document.contains("analysis")
                          ? parse_analysis(read_string(document.at("analysis"), "analysis"))
                          : Analysis::kNash;
  if (document.contains("output")) scenario.output = read_string(document.at("output"), "output");

  switch (scenario.kind) {
    case ScenarioKind::kPdStage:
    case ScenarioKind::kPdSupergame: {
      scenario.schedule = read_schedule(require(document, "pd", ""));
      const ScheduleReport validity = validate_schedule(*scenario.schedule);
      if (!validity.valid()) field_error("pd", validity.Summary());
      if (scenario.kind == ScenarioKind::kPdSupergame) {
        scenario.discounts = read_per_player(require(document, "discount", ""),
                                             scenario.schedule->n_players, "discount");
        for (const auto& alpha : scenario.discounts) {
          if (!(alpha > 0 && alpha < 1)) field_error("discount", "must lie in (0,1)");
        }
        if (document.contains("deviations")) {
          try {
            scenario.deviations =
                parse_deviation_family(read_string(document.at("deviations"), "deviations"));
          } catch (const FormatError& e) {
            field_error("deviations", e.what());
          }
        }
      }
      break;
    }
    case ScenarioKind::kStagHunt:
      scenario.adoption = read_adoption(require(document, "stag_hunt", ""), std::nullopt);
      break;
    case ScenarioKind::kInsurance: {
      scenario.adoption = read_adoption(require(document, "stag_hunt", ""), std::nullopt);
      const json& stanza = require(document, "insurance", "");
      const std::size_t n = scenario.adoption->n_players();
      InsuranceParams insurance;
      insurance.epsilon = read_per_player(require(stanza, "epsilon", "insurance"), n, "insurance.epsilon");
      insurance.delta = stanza.contains("delta")
                            ? read_per_player(stanza.at("delta"), n, "insurance.delta")
                            : scenario.adoption->beta;
      insurance.Validate(*scenario.adoption);
      scenario.insurance = std::move(insurance);
      break;
    }
    case ScenarioKind::kComponentAdoption: {
      const json& stanza = require(document, "component", "");
      scenario.graph_file = read_string(require(stanza, "graph_file", "component"), "component.graph_file");
      std::filesystem::path graph_path(scenario.graph_file);
      if (graph_path.is_relative() && !base_dir.empty()) graph_path = base_dir / graph_path;
      scenario.graph = load_edge_list(graph_path.string());
      if (stanza.contains("exponent")) {
        scenario.exponent = read_number(stanza.at("exponent"), "component.exponent");
      }
      if (!(scenario.exponent >= 1)) field_error("component.exponent", "must be >= 1");
      scenario.adoption = read_adoption(require(document, "stag_hunt", ""), scenario.graph->num_nodes());
      break;
    }
  }

  if (document.contains("dynamics")) {
    const json& stanza = document.at("dynamics");
    if (!stanza.is_object()) field_error("dynamics", "expected an object");
    if (stanza.contains("update_order")) {
      try {
        scenario.dynamics.order =
            parse_update_order(read_string(stanza.at("update_order"), "dynamics.update_order"));
      } catch (const FormatError& e) {
        field_error("dynamics.update_order", e.what());
      }
    }
    if (stanza.contains("max_steps")) {
      scenario.dynamics.max_steps =
          static_cast<std::size_t>(read_count(stanza.at("max_steps"), "dynamics.max_steps"));
    }
    if (stanza.contains("seed")) scenario.dynamics.seed = read_count(stanza.at("seed"), "dynamics.seed");
    if (stanza.contains("initial")) {
      const json& initial = stanza.at("initial");
      if (!initial.is_array()) field_error("dynamics.initial", "expected an array of labels");
      std::vector<std::string> labels;
      for (const auto& label : initial) labels.push_back(read_string(label, "dynamics.initial"));
      scenario.initial = std::move(labels);
    }
  }
  if (document.contains("census")) {
    const json& stanza = document.at("census");
    if (!stanza.is_object()) field_error("census", "expected an object");
    if (stanza.contains("mode")) {
      const std::string mode = read_string(stanza.at("mode"), "census.mode");
      if (mode == "exhaustive") {
        scenario.census.mode = CensusMode::kExhaustive;
      } else if (mode == "monte_carlo") {
        scenario.census.mode = CensusMode::kMonteCarlo;
      } else {
        field_error("census.mode", "expected exhaustive or monte_carlo");
      }
    }
    if (stanza.contains("samples")) scenario.census.samples = read_count(stanza.at("samples"), "census.samples");
  }
  scenario.census.dynamics = scenario.dynamics;

  // Fail early on labels that do not exist in the game.
  if (scenario.initial) {
    try {
      scenario.BuildGame().ProfileFromLabels(*scenario.initial);
    } catch (const GameError& e) {
      field_error("dynamics.initial", e.what());
    }
  }
  return scenario;
}

json load_scenario_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open scenario file '" + path.string() + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
}

Scenario load_scenario(const std::filesystem::path& path) {
  return parse_scenario(load_scenario_json(path), path.parent_path());
}

void set_scenario_field(json& document, const std::string& dotted_path, const std::string& value) {
  parse_number(value);  // reject non-numeric grid values up front
  std::vector<std::string> parts;
  std::stringstream stream(dotted_path);
  for (std::string part; std::getline(stream, part, '.');) parts.push_back(part);
  if (parts.empty()) throw FormatError("empty parameter name");

  json* node = &document;
  for (std::size_t k = 0; k + 1 < parts.size(); ++k) {
    const std::string& part = parts[k];
    if (node->is_array()) {
      std::size_t index = 0;
      try {
        index = std::stoul(part);
      } catch (const std::exception&) {
        field_error(dotted_path, "'" + part + "' is not an array index");
      }
      if (index >= node->size()) field_error(dotted_path, "index out of range");
      node = &(*node)[index];
    } else if (node->is_object() && node->contains(part)) {
      node = &(*node)[part];
    } else {
      field_error(dotted_path, "no such field");
    }
  }
  const std::string& leaf = parts.back();
  if (node->is_array()) {
    std::size_t index = 0;
    try {
      index = std::stoul(leaf);
    } catch (const std::exception&) {
      field_error(dotted_path, "'" + leaf + "' is not an array index");
    }
    if (index >= node->size()) field_error(dotted_path, "index out of range");
    (*node)[index] = value;
    return;
  }
  if (!node->is_object()) field_error(dotted_path, "parent is not an object");
  if (node->contains(leaf)) {
    const json& current = node->at(leaf);
    const bool numeric = current.is_number() || current.is_string() ||
                         (current.is_array() && !current.empty() &&
                          (current.front().is_number() || current.front().is_string()));
    if (!numeric) field_error(dotted_path, "not a numeric field");
  }
  (*node)[leaf] = value;
}

}  // namespace netgame::app
