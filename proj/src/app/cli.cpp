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

#include "netgame/app/cli.hpp"

#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "netgame/app/analysis.hpp"
#include "netgame/errors.hpp"

namespace netgame::app {
namespace {

namespace fs = std::filesystem;

struct GlobalFlags {
  std::optional<std::uint64_t> seed;
  std::uint64_t budget = kDefaultEnumerationBudget;
  std::string out_dir;
  std::string format = "text";
  unsigned threads = 1;
};

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw FormatError("cannot write '" + path.string() + "'");
  file << content;
}

void emit(const AnalysisOutput& output, const std::string& out_dir, const std::string& format,
          std::ostream& out) {
  if (!out_dir.empty()) {
    fs::create_directories(out_dir);
    write_file(fs::path(out_dir) / "report.txt", output.report);
    for (const auto& artifact : output.csv) {
      write_file(fs::path(out_dir) / artifact.file_name, artifact.content);
    }
  }
  if (format == "csv") {
    for (const auto& artifact : output.csv) out << artifact.content;
  } else {
    out << output.report;
  }
  if (!out_dir.empty() && format != "csv") {
    out << "wrote " << (fs::path(out_dir) / "report.txt").string() << "\n";
    for (const auto& artifact : output.csv) {
      out << "wrote " << (fs::path(out_dir) / artifact.file_name).string() << "\n";
    }
  }
}

int run_scenario_command(const std::string& path, std::optional<Analysis> analysis,
                         const GlobalFlags& flags, std::ostream& out) {
  const Scenario scenario = load_scenario(path);
  RunOptions options;
  options.seed = flags.seed;
  options.budget = flags.budget;
  const AnalysisOutput output =
      run_analysis(scenario, analysis.value_or(scenario.analysis), options);
  emit(output, flags.out_dir.empty() ? scenario.output : flags.out_dir, flags.format, out);
  return kExitOk;
}

std::vector<std::string> split_grid(const std::string& text) {
  std::vector<std::string> values;
  std::stringstream stream(text);
  for (std::string value; std::getline(stream, value, ',');) {
    if (!value.empty()) values.push_back(value);
  }
  return values;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Equilibrium analysis for technology-competition games on networks", "netgame"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalFlags flags;
  app.add_option("--seed", flags.seed, "seed for random update orders and Monte Carlo sampling");
  app.add_option("--budget", flags.budget, "largest profile count enumerated exhaustively");
  app.add_option("--out", flags.out_dir, "directory for report.txt and CSV artifacts");
  app.add_option("--format", flags.format, "stdout format")->check(CLI::IsMember({"text", "csv"}));
  app.add_option("--threads", flags.threads, "worker threads for sweeps")->check(CLI::Range(1, 256));

  std::string scenario_path;
  std::optional<Analysis> chosen;
  struct Command {
    const char* name;
    std::optional<Analysis> analysis;
    const char* help;
  };
  const Command commands[] = {
      {"run", std::nullopt, "run the analysis named in the scenario"},
      {"nash", Analysis::kNash, "enumerate pure Nash equilibria"},
      {"supergame-check", Analysis::kSupergameCheck, "check conditional cooperation in a PD supergame"},
      {"dynamics", Analysis::kDynamics, "run best-response dynamics from the scenario's initial profile"},
      {"census", Analysis::kCensus, "tally best-response terminals over initial profiles"},
      {"risk", Analysis::kRisk, "two-player risk dominance between the strict equilibria"},
  };
  std::vector<std::pair<CLI::App*, std::optional<Analysis>>> scenario_commands;
  for (const auto& command : commands) {
    CLI::App* sub = app.add_subcommand(command.name, command.help);
    sub->add_option("scenario", scenario_path, "scenario JSON file")->required();
    scenario_commands.emplace_back(sub, command.analysis);
  }

  std::string param;
  std::string grid_text;
  CLI::App* sweep = app.add_subcommand("sweep", "re-run a scenario over a grid of parameter values");
  sweep->add_option("scenario", scenario_path, "scenario JSON file")->required();
  sweep->add_option("--param", param, "dotted field name, e.g. stag_hunt.beta")->required();
  sweep->add_option("--grid", grid_text, "comma-separated values, e.g. 5,6,7 or 1/3,1/2")->required();

  std::string demo_name;
  CLI::App* demo = app.add_subcommand("demo", "built-in demonstrations");
  demo->add_option("name", demo_name, "fig1, staghunt or insurance")
      ->required()
      ->check(CLI::IsMember({"fig1", "staghunt", "insurance"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }

  try {
    if (demo->parsed()) {
      out << run_demo(demo_name);
      return kExitOk;
    }
    if (sweep->parsed()) {
      const std::vector<std::string> grid = split_grid(grid_text);
      if (grid.empty()) throw FormatError("--grid has no values");
      RunOptions options;
      options.seed = flags.seed;
      options.budget = flags.budget;
      const std::string csv = sweep_csv(load_scenario_json(scenario_path),
                                        fs::path(scenario_path).parent_path(), param, grid,
                                        options, flags.threads);
      emit(AnalysisOutput{csv, {{"sweep.csv", csv}}}, flags.out_dir, "csv", out);
      return kExitOk;
    }
    for (const auto& [sub, analysis] : scenario_commands) {
      if (sub->parsed()) {
        chosen = analysis;
        return run_scenario_command(scenario_path, chosen, flags, out);
      }
    }
  } catch (const BudgetExceeded& e) {
    err << "refused: " << e.what() << "\n";
    return kExitRefused;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  err << "error: no command\n";
  return kExitInputError;
}

}  // namespace netgame::app
