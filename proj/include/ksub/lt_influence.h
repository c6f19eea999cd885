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

#ifndef KSUB_LT_INFLUENCE_H_
#define KSUB_LT_INFLUENCE_H_

#include <cstdint>
#include <memory>
#include <span>
#include <utility>
#include <vector>

#include "ksub/objective.h"

namespace ksub {

using NodeId = std::uint32_t;
using Edge = std::pair<NodeId, NodeId>;

// Directed graph with k influence weights per edge. Nodes are 0..n-1.
// Every node's incoming weight per topic sums to at most 1, which keeps the
// Linear Threshold process well defined.
class TopicGraph {
 public:
  // `weights` is edge-major: weights[q * k + (i - 1)] is w^i of edges[q].
  // Throws kWeightOutOfRange for weights outside [0, 1] or in-sums above 1,
  // kUnknownNode for endpoints >= node_count.
  TopicGraph(std::size_t node_count, int k, std::vector<Edge> edges,
             std::vector<double> weights);

  std::size_t node_count() const { return node_count_; }
  int k() const { return k_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<double>& weights() const { return weights_; }

  // w^i of edge q, i in [1, k].
  double weight(std::size_t q, int i) const { return weights_[q * k_ + i - 1]; }
  double in_weight(NodeId v, int i) const;
  std::size_t out_degree(NodeId u) const {
    return out_offsets_[u + 1] - out_offsets_[u];
  }
  std::size_t in_degree(NodeId v) const { return in_degree_[v]; }

  // Out-edges of u as indices into edges().
  std::span<const std::uint32_t> out_edges(NodeId u) const {
    return {out_edge_ids_.data() + out_offsets_[u],
            out_edge_ids_.data() + out_offsets_[u + 1]};
  }

 private:
  std::size_t node_count_;
  int k_;
  std::vector<Edge> edges_;
  std::vector<double> weights_;
  std::vector<std::size_t> out_offsets_;
  std::vector<std::uint32_t> out_edge_ids_;
  std::vector<std::size_t> in_degree_;
  std::vector<double> in_weight_;  // node-major, k per node
};

// Per-topic weights w^i(u, v) = jitter_i(u, v) / indeg(v), jitter uniform in
// [0.8, 1.2], rescaled per (v, i) so the in-sum never exceeds 1.
std::vector<double> DeriveTopicWeights(std::size_t node_count,
                                       const std::vector<Edge>& edges, int k,
                                       std::uint64_t seed);

// Rescales every (v, i) whose in-sum exceeds 1 down to exactly 1. Returns
// whether anything changed.
bool RenormalizeInWeights(std::size_t node_count,
                          const std::vector<Edge>& edges, int k,
                          std::vector<double>& weights);

// Monte Carlo estimate of the expected number of nodes active in at least
// one topic under k independent Linear Threshold cascades. The R threshold
// profiles θ^i(u) ~ U[0,1) are drawn once at construction, so the estimate
// is a fixed, deterministic function of the seed k-set. Elements are nodes.
class LtInfluenceObjective : public Objective {
 public:
  LtInfluenceObjective(std::shared_ptr<const TopicGraph> graph,
                       std::size_t samples, std::uint64_t seed);

  int k() const override { return graph_->k(); }
  bool Contains(ElementId e) const override {
    return e < graph_->node_count();
  }
  double Evaluate(const KSet& x) const override;
  std::unique_ptr<ObjectiveState> Start() const override;

  std::size_t samples() const { return samples_; }
  const TopicGraph& graph() const { return *graph_; }

  // |union of active sets| in simulation r alone.
  std::int64_t SimulateUnion(const KSet& x, std::size_t r) const;

 private:
  class State;

  double threshold(std::size_t r, int i, NodeId u) const {
    return thresholds_[(r * graph_->k() + (i - 1)) * graph_->node_count() + u];
  }

  std::shared_ptr<const TopicGraph> graph_;
  std::size_t samples_;
  std::vector<double> thresholds_;
};

// lt_spread_estimate: builds the frozen-sample objective and evaluates it.
// Throws kUnknownNode for seeds outside the graph.
double LtSpreadEstimate(std::shared_ptr<const TopicGraph> graph,
                        const KSet& seeds, std::size_t samples,
                        std::uint64_t seed);

}  // namespace ksub

#endif  // KSUB_LT_INFLUENCE_H_
