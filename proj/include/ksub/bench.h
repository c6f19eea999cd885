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

#ifndef KSUB_BENCH_H_
#define KSUB_BENCH_H_

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ksub/algorithms.h"
#include "ksub/error.h"
#include "ksub/instance.h"
#include "ksub/objective.h"

namespace ksub {

// Everything a budget sweep needs. Keys of the flat config file are the CLI
// flag names without dashes ("mc-samples = 100").
struct ExperimentConfig {
  std::string app = "synthetic";  // synthetic | kimk | kspk
  // Instance sources; empty means "generate".
  std::string instance;  // synthetic bundle file
  std::string graph;     // edge list for kimk
  std::string sensors;   // readings for kspk
  std::size_t n = 20;          // generated synthetic elements
  std::size_t nodes = 500;     // kimk: generated size, or BFS sample size
  std::size_t links = 3;       // kimk generator attachment count
  std::size_t locations = 56;  // kspk generated locations
  std::size_t samples = 200;   // kspk generated readings per location
  int k = 3;
  double epsilon = 0.1;
  std::vector<double> budgets;
  std::vector<std::string> algorithms{"laa", "rla"};
  std::uint64_t seed = 1;
  int reps = 5;
  std::string out = "results";
  std::size_t mc_samples = 100;
  std::optional<std::uint64_t> shuffle_seed;
  std::uint64_t max_enum = kDefaultEnumerationCap;
  double cost_lo = 1.0;
  double cost_hi = 10.0;
};

// Sets one key. "budget" and "algo" append (comma lists allowed). Throws
// kInvalidConfig for unknown keys or unparsable values.
void ApplyConfigValue(ExperimentConfig& cfg, std::string_view key,
                      std::string_view value);

// "key = value" or "key value" lines with '#' comments.
ExperimentConfig ParseConfig(std::istream& in);

// Throws kInvalidConfig: empty or non-ascending budgets, reps < 1, unknown
// app or algorithm, k < 2, mc-samples < 1. Throws kEpsilonOutOfRange for
// eps outside (0, 1/5) when rla is selected.
void ValidateConfig(const ExperimentConfig& cfg);

// One repetition's instance and objective. The instance budget is a
// placeholder; the sweep applies each milestone with WithBudget.
struct Workload {
  explicit Workload(KnapsackInstance inst) : instance(std::move(inst)) {}

  KnapsackInstance instance;
  std::shared_ptr<const Objective> objective;
  std::string description;
};

// Builds repetition `rep` of the configured workload. Monte Carlo objectives
// and the optional stream shuffle are seeded from (seed + rep).
Workload BuildWorkload(const ExperimentConfig& cfg, int rep);

struct ResultRow {
  std::string algorithm;
  double budget = 0.0;
  int rep = 0;
  double value = 0.0;
  std::int64_t queries = 0;  // -1 marks a failed run; value is then NaN
  double millis = 0.0;
  std::uint64_t seed = 0;

  bool failed() const { return queries < 0; }
};

// Field-wise equality with NaN equal to NaN.
bool SameRow(const ResultRow& a, const ResultRow& b);

struct ExperimentResult {
  std::vector<ResultRow> rows;
  // Per failed row, in order: the error that stopped it.
  std::vector<Error> failures;
};

// Runs every (budget, algorithm, rep) cell with a fresh CountingOracle.
// A cell that throws becomes a failure row and the sweep continues. Rows are
// ordered by budget, then algorithm (config order), then rep.
ExperimentResult RunExperiment(const ExperimentConfig& cfg);

void WriteResultsCsv(std::ostream& out, const std::vector<ResultRow>& rows);
// Throws kMalformedLine.
std::vector<ResultRow> ReadResultsCsv(std::istream& in);

// Writes results.csv, plot_value.dat, plot_queries.dat, plot_millis.dat and
// summary.txt into `dir` (created if needed). Throws kInvalidConfig for an
// empty table before touching the disk, kIo on write errors.
void EmitOutputs(const std::vector<ResultRow>& rows,
                 const std::filesystem::path& dir,
                 std::string_view header = {});

}  // namespace ksub

#endif  // KSUB_BENCH_H_
