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

#ifndef KSUB_DATA_IO_H_
#define KSUB_DATA_IO_H_

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <vector>

#include "ksub/coverage_bonus.h"
#include "ksub/instance.h"
#include "ksub/lt_influence.h"
#include "ksub/sensor_entropy.h"

namespace ksub {

// Line accounting shared by the parsers. Blank and comment lines count as
// accepted, so accepted + rejected == total.
struct ParseStats {
  std::size_t total_lines = 0;
  std::size_t accepted_lines = 0;
  std::size_t rejected_lines = 0;
  std::vector<std::size_t> rejected_line_numbers;  // 1-based
};

// ---- Edge lists ----------------------------------------------------------

enum class WeightMode {
  kDerived,   // "u v"; weights from DeriveTopicWeights
  kExplicit,  // "u v w1 ... wk"
};

struct EdgeListOptions {
  // Strict parsing throws kMalformedLine on the first bad line; lenient
  // parsing skips it and records it in the stats.
  bool strict = true;
  std::uint64_t weight_seed = 0;  // jitter stream for kDerived
};

struct EdgeListResult {
  std::shared_ptr<const TopicGraph> graph;
  ParseStats stats;
  // Explicit weights whose in-sums exceeded 1 were scaled down.
  bool renormalized = false;
};

// Node ids are nonnegative integers; the graph has max id + 1 nodes.
// Self loops are malformed. Weights outside [0, 1] throw kWeightOutOfRange
// in either mode.
EdgeListResult ParseEdgeList(std::istream& in, int k, WeightMode mode,
                             const EdgeListOptions& options = {});

// Subgraph induced by the first `target` nodes reached by an undirected BFS
// from `start` (restarting from the lowest unvisited node if a component
// runs out). Nodes are renumbered 0.. in visit order.
struct Subgraph {
  std::size_t node_count = 0;
  std::vector<Edge> edges;
  std::vector<NodeId> original_ids;
};
Subgraph InducedBfsSubgraph(std::size_t node_count,
                            const std::vector<Edge>& edges, NodeId start,
                            std::size_t target);

// ---- Sensor readings -----------------------------------------------------

struct SensorParseOptions {
  // Sensors with fewer complete rows are dropped.
  std::size_t min_samples = 2;
};

struct SensorParseResult {
  SensorTable table;
  ParseStats stats;
  std::size_t dropped_rows = 0;     // missing or non-numeric fields
  std::size_t dropped_sensors = 0;  // fewer than min_samples rows
};

// Rows "timestamp sensor-id v1 ... vm" (whitespace or comma separated). A
// first line whose sensor-id field is not an integer is a header naming the
// m types; otherwise m is the widest data row minus two. Each sensor keeps its
// rows in file order and all sensors are truncated to the shortest one.
// Throws kNoUsableRows when no sensor survives.
SensorParseResult ParseSensorReadings(std::istream& in,
                                      const SensorParseOptions& options = {});

// Keeps only the first `types` measurement types.
SensorTable SelectTypes(const SensorTable& table, std::size_t types);

// ---- Instance bundles ----------------------------------------------------

// A synthetic instance: knapsack data, its coverage-bonus objective, and a
// free-form provenance line (file path or generator parameters).
struct InstanceBundle {
  KnapsackInstance instance;
  CoverageBonusSpec spec;
  std::string provenance;
};

// Text format, '#' comments allowed:
//   provenance <rest of line>
//   k <K>
//   budget <B>
//   e <id> <cost> <items separated by ';', or '-'> <w_1> ... <w_K>
// Elements stream in file order. Numbers are written in shortest round-trip
// form, so writing and re-reading is exact.
void WriteInstance(std::ostream& out, const InstanceBundle& bundle);

// Throws kMalformedLine on syntax errors and kInvalidInstance or
// kPairwiseViolation when the content is inconsistent.
InstanceBundle ReadInstance(std::istream& in);

// ---- Generators ----------------------------------------------------------

struct RandomFamily {
  std::size_t items = 0;  // shared item pool; 0 means max(4, n)
  std::size_t min_coverage = 1;
  std::size_t max_coverage = 4;
  double negative_probability = 0.5;
  double cost_lo = 1.0;
  double cost_hi = 10.0;
  double budget_lo = 0.2;  // B / sum of costs
  double budget_hi = 0.8;
};

// Coverage-bonus instance that is k-submodular, nonnegative, and (for
// n >= 2) non-monotone. Every element covers a private anchor item; an
// element with a negative bonus -p (p <= 1) at one position has bonus >= p
// at the others, so pairwise sums stay nonnegative, and its anchor pays for
// the penalty. Element 1 always covers element 0's anchor while element 0
// covers nothing else, so adding element 0 next to element 1 loses value.
InstanceBundle GenRandomInstance(std::size_t n, int k, std::uint64_t seed,
                                 const RandomFamily& family = {});

// Preferential-attachment social graph with reciprocal edges: every new node
// links to `links` distinct earlier nodes chosen proportionally to degree.
// Weights follow DeriveTopicWeights.
std::shared_ptr<const TopicGraph> GenSocialGraph(std::size_t nodes,
                                                 std::size_t links, int k,
                                                 std::uint64_t seed);

// Readings of `types` spatially correlated fields at `locations` random
// points in the unit square, plus per-location scale and sensor noise.
SensorTable GenSensorTable(std::size_t locations, std::size_t types,
                           std::size_t samples, std::uint64_t seed);

}  // namespace ksub

#endif  // KSUB_DATA_IO_H_
