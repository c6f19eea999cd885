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

#include <chrono>
#include <string>
#include <vector>

#include "ksub/algorithms.h"
#include "ksub/error.h"
#include "ksub/text.h"

namespace ksub {

RunResult GreedyBaseline(const KnapsackInstance& inst, CountingOracle& f) {
  const auto start = std::chrono::steady_clock::now();
  const std::uint64_t queries_before = f.queries();
  const int k = inst.k();
  CountingOracle::Cursor x = f.Open();
  std::vector<bool> used(inst.n(), false);
  double cost = 0.0;

  while (true) {
    std::size_t best_j = inst.n();
    Position best_pos = kUnassigned;
    double best_density = 0.0;
    for (std::size_t j = 0; j < inst.n(); ++j) {
      if (used[j] || cost + inst.costs()[j] > inst.budget()) continue;
      for (Position i = 1; i <= k; ++i) {
        double density = x.Gain(inst.universe()[j], i) / inst.costs()[j];
        if (density > best_density) {
          best_density = density;
          best_j = j;
          best_pos = i;
        }
      }
    }
    if (best_j == inst.n()) break;
    x.Add(inst.universe()[best_j], best_pos);
    used[best_j] = true;
    cost += inst.costs()[best_j];
  }

  RunResult out(k);
  out.solution = x.current();
  out.queries = f.queries() - queries_before;
  out.wall_time = std::chrono::duration_cast<std::chrono::nanoseconds>(
      std::chrono::steady_clock::now() - start);
  out.value = f.objective().Evaluate(out.solution);
  out.cost = TotalCost(out.solution, inst);
  out.algorithm = "greedy";
  out.params = {{"B", FormatDouble(inst.budget())},
                {"k", std::to_string(k)},
                {"n", std::to_string(inst.n())}};
  return out;
}

SolverRegistry& SolverRegistry::Global() {
  static SolverRegistry registry;
  return registry;
}

SolverRegistry::SolverRegistry() {
  solvers_["laa"] = [](const KnapsackInstance& inst, CountingOracle& f,
                       const SolverParams& p) {
    return RunLaa(inst, f, p.tie_break).result;
  };
  solvers_["rla"] = [](const KnapsackInstance& inst, CountingOracle& f,
                       const SolverParams& p) {
    RlaOptions options;
    options.epsilon = p.epsilon;
    options.tie_break = p.tie_break;
    options.record_traces = false;
    return RunRla(inst, f, options).result;
  };
  solvers_["greedy"] = [](const KnapsackInstance& inst, CountingOracle& f,
                          const SolverParams&) {
    return GreedyBaseline(inst, f);
  };
  solvers_["brute"] = [](const KnapsackInstance& inst, CountingOracle& f,
                         const SolverParams& p) {
    return BruteForceOpt(inst, f.objective(), p.max_enum);
  };
}

void SolverRegistry::Register(std::string name, Solver solver) {
  solvers_[std::move(name)] = std::move(solver);
}

bool SolverRegistry::Has(std::string_view name) const {
  return solvers_.find(name) != solvers_.end();
}

std::vector<std::string> SolverRegistry::Names() const {
  std::vector<std::string> out;
  for (const auto& [name, solver] : solvers_) out.push_back(name);
  return out;
}

RunResult SolverRegistry::Run(std::string_view name,
                              const KnapsackInstance& inst, CountingOracle& f,
                              const SolverParams& params) const {
  auto it = solvers_.find(name);
  if (it == solvers_.end()) {
    throw Error(ErrorCode::kInvalidConfig,
                "unknown algorithm '" + std::string(name) + "'");
  }
  try {
    RunResult out = it->second(NormalizeInstance(inst), f, params);
    out.algorithm = std::string(name);
    return out;
  } catch (const Error& err) {
    if (err.code() != ErrorCode::kEmptyUniverse) throw;
    RunResult out(inst.k());
    out.algorithm = std::string(name);
    out.params = {{"B", FormatDouble(inst.budget())},
                  {"k", std::to_string(inst.k())},
                  {"n", "0"}};
    return out;
  }
}

}  // namespace ksub
