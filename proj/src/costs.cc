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

#include "ksub/costs.h"

#include <algorithm>
#include <cmath>

#include "ksub/error.h"

namespace ksub {

std::vector<double> NormalizedLinearCosts(const std::vector<double>& scores,
                                          double lo, double hi) {
  if (!(hi > lo && lo > 0)) {
    throw Error(ErrorCode::kInvalidConfig, "cost range needs hi > lo > 0");
  }
  std::vector<double> costs(scores.size(), (lo + hi) / 2);
  if (scores.empty()) return costs;
  const auto [min_it, max_it] = std::minmax_element(scores.begin(), scores.end());
  const double min = *min_it;
  const double max = *max_it;
  if (max == min) return costs;
  for (std::size_t j = 0; j < scores.size(); ++j) {
    // Clamp so rounding never leaves [lo, hi].
    costs[j] = std::clamp(lo + (hi - lo) * (scores[j] - min) / (max - min), lo, hi);
  }
  return costs;
}

std::map<ElementId, double> NormalizedLinearCosts(
    const std::map<ElementId, double>& scores, double lo, double hi) {
  std::vector<double> flat;
  flat.reserve(scores.size());
  for (const auto& [e, s] : scores) flat.push_back(s);
  const std::vector<double> costs = NormalizedLinearCosts(flat, lo, hi);
  std::map<ElementId, double> out;
  std::size_t j = 0;
  for (const auto& [e, s] : scores) out.emplace(e, costs[j++]);
  return out;
}

std::vector<double> OutDegreeScores(const TopicGraph& g) {
  std::vector<double> scores(g.node_count());
  for (std::size_t u = 0; u < g.node_count(); ++u) {
    scores[u] = static_cast<double>(g.out_degree(static_cast<NodeId>(u)));
  }
  return scores;
}

std::vector<double> ReadingVarianceScores(const SensorTable& table) {
  std::vector<double> scores(table.locations.size(), 0.0);
  const double t_count = static_cast<double>(table.samples);
  if (table.samples < 2 || table.types() == 0) return scores;
  for (std::size_t loc = 0; loc < table.locations.size(); ++loc) {
    double total = 0.0;
    for (std::size_t type = 0; type < table.types(); ++type) {
      double mean = 0.0;
      for (std::size_t t = 0; t < table.samples; ++t) mean += table.at(loc, type, t);
      mean /= t_count;
      double ss = 0.0;
      for (std::size_t t = 0; t < table.samples; ++t) {
        const double d = table.at(loc, type, t) - mean;
        ss += d * d;
      }
      total += ss / (t_count - 1);
    }
    scores[loc] = total / static_cast<double>(table.types());
  }
  return scores;
}

}  // namespace ksub
