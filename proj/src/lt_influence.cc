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

#include "ksub/lt_influence.h"

#include <algorithm>
#include <string>

#include "ksub/error.h"
#include "ksub/random.h"

namespace ksub {
namespace {

constexpr double kInSumSlack = 1e-9;

void CheckSeeds(const KSet& x, std::size_t node_count) {
  for (const auto& [e, p] : x) {
    if (e >= node_count) {
      throw Error(ErrorCode::kUnknownNode,
                  "node " + std::to_string(e) + " not in a graph of " +
                      std::to_string(node_count) + " nodes");
    }
  }
}

}  // namespace

TopicGraph::TopicGraph(std::size_t node_count, int k, std::vector<Edge> edges,
                       std::vector<double> weights)
    : node_count_(node_count),
      k_(k),
      edges_(std::move(edges)),
      weights_(std::move(weights)),
      out_offsets_(node_count + 1, 0),
      in_degree_(node_count, 0),
      in_weight_(node_count * static_cast<std::size_t>(k), 0.0) {
  if (k < 1) throw Error(ErrorCode::kInvalidInstance, "graph needs k >= 1");
  if (weights_.size() != edges_.size() * static_cast<std::size_t>(k)) {
    throw Error(ErrorCode::kInvalidInstance, "weight count mismatch");
  }
  for (std::size_t q = 0; q < edges_.size(); ++q) {
    const auto [u, v] = edges_[q];
    if (u >= node_count || v >= node_count) {
      throw Error(ErrorCode::kUnknownNode,
                  "edge " + std::to_string(u) + "->" + std::to_string(v) +
                      " leaves the node range");
    }
    ++out_offsets_[u + 1];
    ++in_degree_[v];
    for (int i = 1; i <= k; ++i) {
      const double w = weight(q, i);
      if (!(w >= 0.0 && w <= 1.0)) {
        throw Error(ErrorCode::kWeightOutOfRange,
                    "weight " + std::to_string(w) + " on edge " +
                        std::to_string(u) + "->" + std::to_string(v));
      }
      in_weight_[v * k + i - 1] += w;
    }
  }
  for (std::size_t v = 0; v < node_count; ++v) {
    for (int i = 0; i < k; ++i) {
      if (in_weight_[v * k + i] > 1.0 + kInSumSlack) {
        throw Error(ErrorCode::kWeightOutOfRange,
                    "in-weight of node " + std::to_string(v) + " on topic " +
                        std::to_string(i + 1) + " exceeds 1");
      }
    }
  }
  for (std::size_t u = 0; u < node_count; ++u) {
    out_offsets_[u + 1] += out_offsets_[u];
  }
  out_edge_ids_.resize(edges_.size());
  std::vector<std::size_t> fill(out_offsets_.begin(), out_offsets_.end() - 1);
  for (std::size_t q = 0; q < edges_.size(); ++q) {
    out_edge_ids_[fill[edges_[q].first]++] = static_cast<std::uint32_t>(q);
  }
}

double TopicGraph::in_weight(NodeId v, int i) const {
  return in_weight_[static_cast<std::size_t>(v) * k_ + i - 1];
}

std::vector<double> DeriveTopicWeights(std::size_t node_count,
                                       const std::vector<Edge>& edges, int k,
                                       std::uint64_t seed) {
  std::vector<std::size_t> indeg(node_count, 0);
  for (const auto& [u, v] : edges) ++indeg.at(v);
  std::mt19937_64 rng(seed);
  std::vector<double> weights(edges.size() * k);
  for (std::size_t q = 0; q < edges.size(); ++q) {
    const double base = 1.0 / static_cast<double>(indeg[edges[q].second]);
    for (int i = 0; i < k; ++i) {
      weights[q * k + i] = UniformDouble(rng, 0.8, 1.2) * base;
    }
  }
  RenormalizeInWeights(node_count, edges, k, weights);
  return weights;
}

bool RenormalizeInWeights(std::size_t node_count,
                          const std::vector<Edge>& edges, int k,
                          std::vector<double>& weights) {
  std::vector<double> sums(node_count * k, 0.0);
  for (std::size_t q = 0; q < edges.size(); ++q) {
    for (int i = 0; i < k; ++i) sums[edges[q].second * k + i] += weights[q * k + i];
  }
  bool changed = false;
  for (std::size_t q = 0; q < edges.size(); ++q) {
    for (int i = 0; i < k; ++i) {
      const double s = sums[edges[q].second * k + i];
      if (s > 1.0) {
        weights[q * k + i] /= s;
        changed = true;
      }
    }
  }
  return changed;
}

// Cascade bookkeeping for every (simulation, topic). Adding a seed only
// propagates from that seed: with frozen thresholds the LT process is a
// closure operator, so closure(S + e) = closure(closure(S) + e).
class LtInfluenceObjective::State : public ObjectiveState {
 public:
  explicit State(const LtInfluenceObjective& f)
      : f_(f),
        g_(*f.graph_),
        n_(g_.node_count()),
        current_(f.k()),
        active_(f.samples_ * f.k() * n_, 0),
        acc_(f.samples_ * f.k() * n_, 0.0),
        topics_(f.samples_ * n_, 0) {}

  const KSet& current() const override { return current_; }
  double value() const override {
    return static_cast<double>(union_total_) /
           static_cast<double>(f_.samples_);
  }

  double ValueWith(ElementId e, Position i) override {
    f_.CheckExtension(current_, e, i);
    std::int64_t gained = 0;
    for (std::size_t r = 0; r < f_.samples_; ++r) {
      gained += Spread(r, i, e, /*undo=*/true);
    }
    return static_cast<double>(union_total_ + gained) /
           static_cast<double>(f_.samples_);
  }

  void Add(ElementId e, Position i) override {
    f_.CheckExtension(current_, e, i);
    for (std::size_t r = 0; r < f_.samples_; ++r) {
      union_total_ += Spread(r, i, e, /*undo=*/false);
    }
    current_.Insert(e, i);
  }

 private:
  std::size_t Slot(std::size_t r, int i) const {
    return (r * g_.k() + (i - 1)) * n_;
  }

  // Activates `seed` on topic i in simulation r and runs the cascade.
  // Returns how many nodes became active in their first topic. With `undo`
  // every change is rolled back before returning.
  std::int64_t Spread(std::size_t r, int i, NodeId seed, bool undo) {
    const std::size_t base = Slot(r, i);
    if (active_[base + seed]) return 0;
    std::int64_t fresh = 0;
    activated_.clear();
    touched_.clear();
    auto activate = [&](NodeId v) {
      active_[base + v] = 1;
      activated_.push_back(v);
      if (topics_[r * n_ + v]++ == 0) ++fresh;
    };
    activate(seed);
    for (std::size_t head = 0; head < activated_.size(); ++head) {
      const NodeId u = activated_[head];
      for (std::uint32_t q : g_.out_edges(u)) {
        const NodeId v = g_.edges()[q].second;
        if (active_[base + v]) continue;
        double& acc = acc_[base + v];
        if (undo) touched_.emplace_back(v, acc);
        acc += g_.weight(q, i);
        if (acc >= f_.threshold(r, i, v)) activate(v);
      }
    }
    if (undo) {
      for (auto it = touched_.rbegin(); it != touched_.rend(); ++it) {
        acc_[base + it->first] = it->second;
      }
      for (NodeId v : activated_) {
        active_[base + v] = 0;
        --topics_[r * n_ + v];
      }
    }
    return fresh;
  }

  const LtInfluenceObjective& f_;
  const TopicGraph& g_;
  std::size_t n_;
  KSet current_;
  std::vector<char> active_;
  std::vector<double> acc_;
  std::vector<std::uint8_t> topics_;
  std::int64_t union_total_ = 0;
  std::vector<NodeId> activated_;
  std::vector<std::pair<NodeId, double>> touched_;
};

LtInfluenceObjective::LtInfluenceObjective(
    std::shared_ptr<const TopicGraph> graph, std::size_t samples,
    std::uint64_t seed)
    : graph_(std::move(graph)), samples_(samples) {
  if (samples_ == 0) {
    throw Error(ErrorCode::kInvalidConfig, "need at least one simulation");
  }
  const std::size_t n = graph_->node_count();
  const int k = graph_->k();
  thresholds_.resize(samples_ * k * n);
  for (std::size_t r = 0; r < samples_; ++r) {
    // One stream per simulation so profiles do not shift when R changes.
    std::mt19937_64 rng(MixSeed(seed, r));
    for (std::size_t q = 0; q < static_cast<std::size_t>(k) * n; ++q) {
      thresholds_[r * k * n + q] = UnitDouble(rng);
    }
  }
}

std::int64_t LtInfluenceObjective::SimulateUnion(const KSet& x,
                                                 std::size_t r) const {
  CheckSeeds(x, graph_->node_count());
  CheckArgument(x);
  const TopicGraph& g = *graph_;
  const std::size_t n = g.node_count();
  std::vector<char> in_union(n, 0);
  std::vector<char> active(n);
  std::vector<double> acc(n);
  std::vector<NodeId> queue;
  std::int64_t count = 0;
  for (int i = 1; i <= g.k(); ++i) {
    std::fill(active.begin(), active.end(), 0);
    std::fill(acc.begin(), acc.end(), 0.0);
    queue.clear();
    for (const auto& [e, p] : x) {
      if (p != i) continue;
      active[e] = 1;
      queue.push_back(e);
    }
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const NodeId u = queue[head];
      if (!in_union[u]) {
        in_union[u] = 1;
        ++count;
      }
      for (std::uint32_t q : g.out_edges(u)) {
        const NodeId v = g.edges()[q].second;
        if (active[v]) continue;
        acc[v] += g.weight(q, i);
        if (acc[v] >= threshold(r, i, v)) {
          active[v] = 1;
          queue.push_back(v);
        }
      }
    }
  }
  return count;
}

double LtInfluenceObjective::Evaluate(const KSet& x) const {
  CheckSeeds(x, graph_->node_count());
  CheckArgument(x);
  if (x.empty()) return 0.0;
  std::int64_t total = 0;
  for (std::size_t r = 0; r < samples_; ++r) total += SimulateUnion(x, r);
  return static_cast<double>(total) / static_cast<double>(samples_);
}

std::unique_ptr<ObjectiveState> LtInfluenceObjective::Start() const {
  return std::make_unique<State>(*this);
}

double LtSpreadEstimate(std::shared_ptr<const TopicGraph> graph,
                        const KSet& seeds, std::size_t samples,
                        std::uint64_t seed) {
  LtInfluenceObjective f(std::move(graph), samples, seed);
  return f.Evaluate(seeds);
}

}  // namespace ksub
