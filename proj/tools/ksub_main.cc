// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// ksub: budget sweeps, single solves, exact optima and k-submodularity
// checks for knapsack-constrained k-submodular maximization.
//
// Exit codes: 0 success, 1 objective failed a check, 2 config/validation
// error, 3 instance too large for exact mode, 4 IO error.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ksub/algorithms.h"
#include "ksub/bench.h"
#include "ksub/data_io.h"
#include "ksub/error.h"
#include "ksub/text.h"
#include "ksub/verify.h"

namespace {

using ksub::ErrorCode;

int ExitCode(const ksub::Error& e) {
  switch (e.code()) {
    case ErrorCode::kInstanceTooLarge:
      return 3;
    case ErrorCode::kIo:
      return 4;
    default:
      return 2;
  }
}

// Raw flag values, applied on top of an optional config file.
struct Flags {
  std::string config;
  std::map<std::string, std::vector<std::string>> values;

  void Add(CLI::App* app, const std::string& name, const std::string& help) {
    app->add_option("--" + name, values[name], help)->allow_extra_args(false);
  }

  ksub::ExperimentConfig Resolve() {
    ksub::ExperimentConfig cfg;
    if (!config.empty()) {
      std::ifstream in(config);
      if (!in) throw ksub::Error(ErrorCode::kIo, "cannot open " + config);
      cfg = ksub::ParseConfig(in);
    }
    for (const auto& [name, given] : values) {
      if (given.empty()) continue;
      if (name == "budget") cfg.budgets.clear();
      if (name == "algo") cfg.algorithms.clear();
      const bool list = name == "budget" || name == "algo";
      for (std::size_t j = list ? 0 : given.size() - 1; j < given.size(); ++j) {
        ksub::ApplyConfigValue(cfg, name, given[j]);
      }
    }
    return cfg;
  }
};

void AddCommonFlags(CLI::App* app, Flags& flags) {
  app->add_option("--config", flags.config, "flat key = value config file");
  flags.Add(app, "app", "synthetic | kimk | kspk");
  flags.Add(app, "instance", "synthetic instance file");
  flags.Add(app, "graph", "edge list for kimk");
  flags.Add(app, "sensors", "sensor readings for kspk");
  flags.Add(app, "n", "generated synthetic size");
  flags.Add(app, "nodes", "kimk graph size");
  flags.Add(app, "k", "number of positions");
  flags.Add(app, "seed", "base seed");
  flags.Add(app, "mc-samples", "Monte Carlo simulations for kimk");
  flags.Add(app, "shuffle-seed", "shuffle the stream order");
  flags.Add(app, "max-enum", "enumeration cap for exact modes");
}

void PrintResult(const ksub::RunResult& r) {
  std::printf("algorithm %s\n", r.algorithm.c_str());
  for (const auto& [key, value] : r.params) {
    std::printf("  %s = %s\n", key.c_str(), value.c_str());
  }
  std::printf("solution %s\n", r.solution.ToString().c_str());
  std::printf("value %s\ncost %s\nqueries %llu\nmillis %.3f\n",
              ksub::FormatDouble(r.value).c_str(),
              ksub::FormatDouble(r.cost).c_str(),
              static_cast<unsigned long long>(r.queries),
              static_cast<double>(r.wall_time.count()) / 1e6);
}

int RunCommand(Flags& flags) {
  ksub::ExperimentConfig cfg = flags.Resolve();
  ksub::ValidateConfig(cfg);
  ksub::ExperimentResult result = ksub::RunExperiment(cfg);
  const ksub::Workload w = ksub::BuildWorkload(cfg, 0);
  std::string header = "app " + cfg.app + ": " + w.description +
                       "\nk=" + std::to_string(cfg.k) +
                       " epsilon=" + ksub::FormatDouble(cfg.epsilon) +
                       " reps=" + std::to_string(cfg.reps);
  ksub::EmitOutputs(result.rows, cfg.out, header);
  std::printf("%zu rows written to %s\n", result.rows.size(), cfg.out.c_str());
  int code = 0;
  for (const ksub::Error& e : result.failures) {
    std::fprintf(stderr, "run failed: %s\n", e.what());
    code = std::max(code, ExitCode(e));
  }
  return code;
}

int SolveCommand(Flags& flags) {
  ksub::ExperimentConfig cfg = flags.Resolve();
  if (cfg.algorithms.size() != 1) {
    throw ksub::Error(ErrorCode::kInvalidConfig, "solve takes exactly one --algo");
  }
  if (cfg.budgets.size() > 1) {
    throw ksub::Error(ErrorCode::kInvalidConfig, "solve takes at most one --budget");
  }
  const ksub::Workload w = ksub::BuildWorkload(cfg, 0);
  if (cfg.budgets.empty()) cfg.budgets.push_back(w.instance.budget());
  ksub::ValidateConfig(cfg);
  ksub::SolverParams params;
  params.epsilon = cfg.epsilon;
  params.max_enum = cfg.max_enum;
  ksub::CountingOracle oracle(*w.objective);
  PrintResult(ksub::SolverRegistry::Global().Run(
      cfg.algorithms[0], w.instance.WithBudget(cfg.budgets[0]), oracle, params));
  return 0;
}

int OptCommand(Flags& flags) {
  ksub::ExperimentConfig cfg = flags.Resolve();
  cfg.algorithms = {"brute"};
  const ksub::Workload w = ksub::BuildWorkload(cfg, 0);
  if (cfg.budgets.empty()) cfg.budgets.push_back(w.instance.budget());
  ksub::ValidateConfig(cfg);
  for (double b : cfg.budgets) {
    ksub::CountingOracle oracle(*w.objective);
    PrintResult(ksub::SolverRegistry::Global().Run(
        "brute", w.instance.WithBudget(b), oracle, {.max_enum = cfg.max_enum}));
  }
  return 0;
}

int GenCommand(Flags& flags, const std::string& out_path) {
  ksub::ExperimentConfig cfg = flags.Resolve();
  if (cfg.k < 2 || cfg.n < 1) {
    throw ksub::Error(ErrorCode::kInvalidConfig, "gen needs n >= 1 and k >= 2");
  }
  ksub::InstanceBundle bundle = ksub::GenRandomInstance(cfg.n, cfg.k, cfg.seed);
  if (out_path.empty() || out_path == "-") {
    ksub::WriteInstance(std::cout, bundle);
    return 0;
  }
  const std::filesystem::path path(out_path);
  std::error_code ec;
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path(), ec);
  std::ofstream out(path);
  if (!out) throw ksub::Error(ErrorCode::kIo, "cannot write " + out_path);
  ksub::WriteInstance(out, bundle);
  return 0;
}

int CheckCommand(Flags& flags, bool sampled, std::uint64_t trials) {
  ksub::ExperimentConfig cfg = flags.Resolve();
  const ksub::Workload w = ksub::BuildWorkload(cfg, 0);
  ksub::CheckOptions options;
  options.mode = sampled ? ksub::CheckMode::kSampled : ksub::CheckMode::kExhaustive;
  options.max_enum = cfg.max_enum;
  options.seed = cfg.seed;
  options.trials = trials;
  const ksub::KSubReport report =
      ksub::CheckKSubmodularity(*w.objective, w.instance, options);
  std::printf("%s\n%s", w.description.c_str(),
              ksub::ReportToText(report).c_str());
  return report.ksubmodular() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"k-submodular maximization under a knapsack constraint"};
  app.require_subcommand(1);

  Flags run_flags, solve_flags, opt_flags, gen_flags, check_flags;

  CLI::App* run = app.add_subcommand("run", "budget sweep from a config file");
  AddCommonFlags(run, run_flags);
  run_flags.Add(run, "algo", "laa | rla | greedy | brute; comma list or repeat");
  run_flags.Add(run, "epsilon", "rla accuracy, in (0, 0.2)");
  run_flags.Add(run, "budget", "budget milestones, ascending");
  run_flags.Add(run, "reps", "repetitions per budget");
  run_flags.Add(run, "out", "output directory");

  CLI::App* solve = app.add_subcommand("solve", "one algorithm on one instance");
  AddCommonFlags(solve, solve_flags);
  solve_flags.Add(solve, "algo", "laa | rla | greedy | brute");
  solve_flags.Add(solve, "epsilon", "rla accuracy, in (0, 0.2)");
  solve_flags.Add(solve, "budget", "knapsack budget");

  CLI::App* opt = app.add_subcommand("opt", "exact optimum by enumeration");
  AddCommonFlags(opt, opt_flags);
  opt_flags.Add(opt, "budget", "budget; repeat for several");

  std::string gen_out;
  CLI::App* gen = app.add_subcommand("gen", "write a synthetic instance");
  AddCommonFlags(gen, gen_flags);
  gen->add_option("--out", gen_out, "output file (default stdout)");

  bool sampled = false;
  std::uint64_t trials = 2000;
  CLI::App* check = app.add_subcommand("check", "certify k-submodularity");
  AddCommonFlags(check, check_flags);
  check->add_flag("--sampled", sampled, "random checks instead of enumeration");
  check->add_option("--trials", trials, "sampled checks per property");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return e.get_exit_code() == 0 ? app.exit(e) : (app.exit(e), 2);
  }

  try {
    if (*run) return RunCommand(run_flags);
    if (*solve) return SolveCommand(solve_flags);
    if (*opt) return OptCommand(opt_flags);
    if (*gen) return GenCommand(gen_flags, gen_out);
    if (*check) return CheckCommand(check_flags, sampled, trials);
  } catch (const ksub::Error& e) {
    // what() already leads with the code name.
    std::fprintf(stderr, "error: %s\n", e.what());
    return ExitCode(e);
  }
  return 0;
}
