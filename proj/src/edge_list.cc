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
#include <istream>
#include <limits>
#include <string>

#include "ksub/data_io.h"
#include "ksub/error.h"
#include "ksub/text.h"

namespace ksub {
namespace {

// Larger ids are almost certainly corrupt input rather than a real graph.
constexpr long long kMaxNodeId = 100'000'000;

std::optional<NodeId> ParseNode(std::string_view s) {
  auto v = ParseInt(s);
  if (!v || *v < 0 || *v > kMaxNodeId) return std::nullopt;
  return static_cast<NodeId>(*v);
}

}  // namespace

EdgeListResult ParseEdgeList(std::istream& in, int k, WeightMode mode,
                             const EdgeListOptions& options) {
  if (k < 1) throw Error(ErrorCode::kInvalidConfig, "edge list needs k >= 1");
  EdgeListResult result;
  ParseStats& stats = result.stats;
  std::vector<Edge> edges;
  std::vector<double> weights;
  std::size_t node_count = 0;

  std::string line;
  while (std::getline(in, line)) {
    const std::size_t line_no = ++stats.total_lines;
    auto reject = [&](const std::string& why) {
      if (options.strict) {
        throw Error(ErrorCode::kMalformedLine,
                    "line " + std::to_string(line_no) + ": " + why);
      }
      ++stats.rejected_lines;
      stats.rejected_line_numbers.push_back(line_no);
    };
    const std::string_view body = StripComment(line);
    if (body.empty()) {
      ++stats.accepted_lines;
      continue;
    }
    const auto fields = SplitFields(body);
    if (fields.size() < 2) {
      reject("expected \"u v\"");
      continue;
    }
    const auto u = ParseNode(fields[0]);
    const auto v = ParseNode(fields[1]);
    if (!u || !v) {
      reject("node ids must be nonnegative integers");
      continue;
    }
    if (*u == *v) {
      reject("self loop");
      continue;
    }
    std::vector<double> w;
    for (std::size_t f = 2; f < fields.size(); ++f) {
      auto x = ParseDouble(fields[f]);
      if (!x) {
        w.clear();
        break;
      }
      w.push_back(*x);
    }
    if (w.size() + 2 != fields.size()) {
      reject("non-numeric weight");
      continue;
    }
    // Range errors are reported before arity so a lone bad weight is
    // always a weight error.
    for (double x : w) {
      if (!(x >= 0.0 && x <= 1.0)) {
        throw Error(ErrorCode::kWeightOutOfRange,
                    "line " + std::to_string(line_no) + ": weight " +
                        FormatDouble(x) + " outside [0, 1]");
      }
    }
    const std::size_t want = mode == WeightMode::kExplicit ? k : 0;
    if (w.size() != want) {
      reject("expected " + std::to_string(want) + " weights, got " +
             std::to_string(w.size()));
      continue;
    }
    edges.emplace_back(*u, *v);
    weights.insert(weights.end(), w.begin(), w.end());
    node_count = std::max<std::size_t>(node_count, std::max(*u, *v) + 1);
    ++stats.accepted_lines;
  }

  if (mode == WeightMode::kDerived) {
    weights = DeriveTopicWeights(node_count, edges, k, options.weight_seed);
  } else {
    result.renormalized = RenormalizeInWeights(node_count, edges, k, weights);
  }
  result.graph = std::make_shared<const TopicGraph>(node_count, k,
                                                    std::move(edges),
                                                    std::move(weights));
  return result;
}

Subgraph InducedBfsSubgraph(std::size_t node_count,
                            const std::vector<Edge>& edges, NodeId start,
                            std::size_t target) {
  std::vector<std::vector<NodeId>> adj(node_count);
  for (const auto& [u, v] : edges) {
    adj.at(u).push_back(v);
    adj.at(v).push_back(u);
  }
  for (auto& list : adj) std::sort(list.begin(), list.end());

  constexpr NodeId kNone = std::numeric_limits<NodeId>::max();
  std::vector<NodeId> renumber(node_count, kNone);
  Subgraph sub;
  target = std::min(target, node_count);
  NodeId next_root = 0;
  std::vector<NodeId> queue;
  std::size_t head = 0;
  if (start < node_count && target > 0) queue.push_back(start);
  while (sub.original_ids.size() < target) {
    if (head == queue.size()) {
      while (renumber[next_root] != kNone) ++next_root;
      queue.push_back(next_root);
    }
    const NodeId u = queue[head++];
    if (renumber[u] != kNone) continue;
    renumber[u] = static_cast<NodeId>(sub.original_ids.size());
    sub.original_ids.push_back(u);
    for (NodeId v : adj[u]) {
      if (renumber[v] == kNone) queue.push_back(v);
    }
  }
  sub.node_count = sub.original_ids.size();
  for (const auto& [u, v] : edges) {
    if (renumber[u] != kNone && renumber[v] != kNone) {
      sub.edges.emplace_back(renumber[u], renumber[v]);
    }
  }
  return sub;
}

}  // namespace ksub
