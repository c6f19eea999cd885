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

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Dense>

#include "ksub/data_io.h"
#include "ksub/error.h"
#include "ksub/random.h"
#include "ksub/text.h"

namespace ksub {
namespace {

// Bonuses are multiples of 1/4 and costs multiples of 1/64, so instance
// files stay short and exact.
double Quarter(std::mt19937_64& rng, int lo_quarters, int hi_quarters) {
  return (lo_quarters + static_cast<int>(UniformIndex(
                            rng, hi_quarters - lo_quarters + 1))) /
         4.0;
}

double GridCost(std::mt19937_64& rng, double lo, double hi) {
  const auto steps = static_cast<std::uint64_t>(std::floor((hi - lo) * 64));
  return lo + static_cast<double>(UniformIndex(rng, steps + 1)) / 64.0;
}

}  // namespace

InstanceBundle GenRandomInstance(std::size_t n, int k, std::uint64_t seed,
                                 const RandomFamily& family) {
  if (n < 1 || k < 2) {
    throw Error(ErrorCode::kInvalidConfig, "generator needs n >= 1, k >= 2");
  }
  std::mt19937_64 rng(seed);
  const std::size_t items = family.items ? family.items : std::max<std::size_t>(4, n);
  // Shared items are 0..items-1; element e's anchor is items + e.
  const std::size_t pool = items + n;
  const std::size_t lo = std::max<std::size_t>(family.min_coverage, 1);
  const std::size_t hi = std::max(lo, family.max_coverage);

  CoverageBonusSpec spec;
  spec.k = k;
  std::vector<ElementId> universe(n);
  std::vector<double> costs(n);
  double total_cost = 0.0;
  for (std::size_t e = 0; e < n; ++e) {
    universe[e] = static_cast<ElementId>(e);
    std::vector<ItemId> cov{static_cast<ItemId>(items + e)};
    const std::size_t extra = lo - 1 + UniformIndex(rng, hi - lo + 1);
    for (std::size_t q = 0; q < extra; ++q) {
      const auto item = static_cast<ItemId>(UniformIndex(rng, pool));
      if (item != items + e) cov.push_back(item);
    }
    std::vector<double> w(k);
    if (UnitDouble(rng) < family.negative_probability) {
      const double penalty = Quarter(rng, 1, 4);
      const auto neg = static_cast<std::size_t>(UniformIndex(rng, k));
      for (int i = 0; i < k; ++i) {
        w[i] = static_cast<std::size_t>(i) == neg ? -penalty
                                                  : penalty + Quarter(rng, 0, 8);
      }
    } else {
      for (int i = 0; i < k; ++i) w[i] = Quarter(rng, 0, 8);
    }
    costs[e] = GridCost(rng, family.cost_lo, family.cost_hi);
    total_cost += costs[e];
    spec.coverage[universe[e]] = std::move(cov);
    spec.bonus[universe[e]] = std::move(w);
  }
  if (n >= 2) {
    // The fixed witness described in the header.
    spec.coverage[0] = {static_cast<ItemId>(items)};
    auto& w0 = spec.bonus[0];
    if (*std::min_element(w0.begin(), w0.end()) >= 0) {
      w0[0] = -1.0;
      for (int i = 1; i < k; ++i) w0[i] = std::max(w0[i], 1.0);
    }
    auto& c1 = spec.coverage[1];
    if (std::find(c1.begin(), c1.end(), items) == c1.end()) c1.push_back(items);
  }
  for (auto& [e, cov] : spec.coverage) {
    std::sort(cov.begin(), cov.end());
    cov.erase(std::unique(cov.begin(), cov.end()), cov.end());
  }
  const double budget =
      UniformDouble(rng, family.budget_lo, family.budget_hi) * total_cost;

  InstanceBundle bundle{
      KnapsackInstance(std::move(universe), k, std::move(costs), budget),
      std::move(spec),
      "gen n=" + std::to_string(n) + " k=" + std::to_string(k) +
          " seed=" + std::to_string(seed)};
  return bundle;
}

std::shared_ptr<const TopicGraph> GenSocialGraph(std::size_t nodes,
                                                 std::size_t links, int k,
                                                 std::uint64_t seed) {
  if (nodes < 2 || links < 1) {
    throw Error(ErrorCode::kInvalidConfig,
                "social graph needs >= 2 nodes and >= 1 link per node");
  }
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  // Every edge endpoint once, so a uniform pick is degree-proportional.
  std::vector<NodeId> ends;
  edges.emplace_back(0, 1);
  edges.emplace_back(1, 0);
  ends = {0, 1};
  for (NodeId u = 2; u < nodes; ++u) {
    std::vector<NodeId> targets;
    const std::size_t want = std::min<std::size_t>(links, u);
    while (targets.size() < want) {
      const NodeId v = ends[UniformIndex(rng, ends.size())];
      if (std::find(targets.begin(), targets.end(), v) == targets.end()) {
        targets.push_back(v);
      }
    }
    for (NodeId v : targets) {
      edges.emplace_back(u, v);
      edges.emplace_back(v, u);
      ends.push_back(u);
      ends.push_back(v);
    }
  }
  std::vector<double> weights =
      DeriveTopicWeights(nodes, edges, k, MixSeed(seed, 1));
  return std::make_shared<const TopicGraph>(nodes, k, std::move(edges),
                                            std::move(weights));
}

SensorTable GenSensorTable(std::size_t locations, std::size_t types,
                           std::size_t samples, std::uint64_t seed) {
  if (locations < 1 || types < 1 || samples < 2) {
    throw Error(ErrorCode::kInvalidConfig,
                "sensor table needs locations, types >= 1 and samples >= 2");
  }
  std::mt19937_64 rng(seed);
  std::vector<double> px(locations), py(locations), scale(locations);
  for (std::size_t l = 0; l < locations; ++l) {
    px[l] = UnitDouble(rng);
    py[l] = UnitDouble(rng);
    scale[l] = UniformDouble(rng, 0.5, 2.0);
  }
  // Squared-exponential kernel over locations, length scale 0.3.
  Eigen::MatrixXd kernel(locations, locations);
  for (std::size_t a = 0; a < locations; ++a) {
    for (std::size_t b = 0; b < locations; ++b) {
      const double dx = px[a] - px[b];
      const double dy = py[a] - py[b];
      kernel(a, b) = std::exp(-(dx * dx + dy * dy) / (2 * 0.3 * 0.3));
    }
    kernel(a, a) += 1e-6;
  }
  const Eigen::MatrixXd chol = Eigen::LLT<Eigen::MatrixXd>(kernel).matrixL();

  SensorTable table;
  for (std::size_t l = 0; l < locations; ++l) {
    table.locations.push_back(static_cast<ElementId>(l));
  }
  for (std::size_t t = 0; t < types; ++t) {
    table.type_names.push_back("type" + std::to_string(t + 1));
  }
  table.samples = samples;
  table.values.assign(locations * types * samples, 0.0);
  Eigen::VectorXd z(locations);
  for (std::size_t s = 0; s < samples; ++s) {
    // A field shared by all types plus one field per type.
    for (std::size_t l = 0; l < locations; ++l) z(l) = StandardNormal(rng);
    const Eigen::VectorXd common = chol * z;
    for (std::size_t t = 0; t < types; ++t) {
      for (std::size_t l = 0; l < locations; ++l) z(l) = StandardNormal(rng);
      const Eigen::VectorXd own = chol * z;
      for (std::size_t l = 0; l < locations; ++l) {
        const double noise = 0.1 * StandardNormal(rng);
        table.values[(l * types + t) * samples + s] =
            scale[l] * (0.6 * common(l) + 0.8 * own(l)) + noise;
      }
    }
  }
  return table;
}

}  // namespace ksub
