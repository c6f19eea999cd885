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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "ksub/data_io.h"
#include "ksub/error.h"
#include "test_util.h"

namespace ksub {
namespace {

using testing::AllKSets;
using testing::ExpectCode;
using testing::Make;

std::shared_ptr<const TopicGraph> Graph(std::size_t n, int k,
                                        std::vector<Edge> edges,
                                        std::vector<double> w) {
  return std::make_shared<TopicGraph>(n, k, std::move(edges), std::move(w));
}

// Exact expected union size via the live-edge view: in topic i each node
// keeps at most one in-edge, (u, v) with probability w^i(u, v). Topics are
// independent, so P(v active somewhere) = 1 - prod_i (1 - P_i(v)).
double ExactSpread(const TopicGraph& g, const KSet& x) {
  const std::size_t n = g.node_count();
  std::vector<std::vector<std::size_t>> in(n);
  for (std::size_t q = 0; q < g.edge_count(); ++q) in[g.edges()[q].second].push_back(q);
  std::vector<double> inactive(n, 1.0);
  for (int i = 1; i <= g.k(); ++i) {
    std::vector<double> p_active(n, 0.0);
    // choice[v] in 0..|in[v]|; |in[v]| means no live in-edge.
    std::vector<std::size_t> choice(n, 0);
    while (true) {
      double prob = 1.0;
      for (std::size_t v = 0; v < n; ++v) {
        if (choice[v] == in[v].size()) {
          prob *= 1.0 - g.in_weight(static_cast<NodeId>(v), i);
        } else {
          prob *= g.weight(in[v][choice[v]], i);
        }
      }
      if (prob > 0) {
        for (std::size_t v = 0; v < n; ++v) {
          // Walk the unique live in-edge chain back to a seed.
          std::size_t u = v;
          for (std::size_t steps = 0; steps <= n; ++steps) {
            if (x.at(static_cast<ElementId>(u)) == i) {
              p_active[v] += prob;
              break;
            }
            if (choice[u] == in[u].size()) break;
            u = g.edges()[in[u][choice[u]]].first;
          }
        }
      }
      std::size_t v = 0;
      while (v < n && ++choice[v] > in[v].size()) choice[v++] = 0;
      if (v == n) break;
    }
    for (std::size_t v = 0; v < n; ++v) inactive[v] *= 1.0 - p_active[v];
  }
  double total = 0;
  for (double q : inactive) total += 1.0 - q;
  return total;
}

TEST(LtSpreadTest, Examples) {
  auto sure = Graph(2, 1, {{0, 1}}, {1.0});
  EXPECT_EQ(LtSpreadEstimate(sure, KSet(1), 50, 1), 0.0);
  EXPECT_EQ(LtSpreadEstimate(sure, Make(1, {{0, 1}}), 50, 1), 2.0);

  auto half = Graph(2, 1, {{0, 1}}, {0.5});
  const double est = LtSpreadEstimate(half, Make(1, {{0, 1}}), 10000, 2026);
  EXPECT_GE(est, 1.45);
  EXPECT_LE(est, 1.55);
  EXPECT_EQ(ExactSpread(*half, Make(1, {{0, 1}})), 1.5);
}

TEST(LtSpreadTest, AgreesWithLiveEdgeEnumeration) {
  // A 5-node graph with a cycle, a fan-in, and topic-specific weights.
  std::vector<Edge> edges{{0, 1}, {1, 2}, {2, 0}, {3, 2}, {2, 4}, {3, 4}};
  std::vector<double> w{0.6, 0.2, 0.7, 0.3, 0.4, 0.5,
                        0.3, 0.4, 0.5, 0.1, 0.2, 0.6};
  auto g = Graph(5, 2, edges, w);
  const std::size_t samples = 40000;
  LtInfluenceObjective f(g, samples, 99);
  for (const KSet& x : {Make(2, {{0, 1}}), Make(2, {{3, 2}}),
                        Make(2, {{0, 1}, {3, 2}}), Make(2, {{1, 1}, {4, 2}}),
                        Make(2, {{0, 2}, {2, 1}, {3, 1}})}) {
    const double exact = ExactSpread(*g, x);
    // Union size is at most 5, so the standard error is below 5 / sqrt(R).
    EXPECT_NEAR(f.Evaluate(x), exact, 4 * 5 / std::sqrt(double(samples)))
        << x.ToString();
  }
}

TEST(LtObjectiveTest, MonotoneWithinEachSimulation) {
  auto g = GenSocialGraph(7, 2, 2, 4);
  LtInfluenceObjective f(g, 30, 5);
  std::vector<KSet> all = AllKSets(4, 2);
  for (std::size_t r = 0; r < f.samples(); r += 7) {
    for (const KSet& x : all) {
      for (const KSet& y : all) {
        if (!IsSubKSet(x, y)) continue;
        ASSERT_LE(f.SimulateUnion(x, r), f.SimulateUnion(y, r))
            << x.ToString() << " " << y.ToString();
      }
    }
  }
}

TEST(LtObjectiveTest, IncrementalStateMatchesEvaluate) {
  auto g = GenSocialGraph(60, 3, 3, 8);
  LtInfluenceObjective f(g, 40, 13);
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    auto state = f.Start();
    std::vector<ElementId> order(60);
    for (ElementId e = 0; e < 60; ++e) order[e] = e;
    std::shuffle(order.begin(), order.end(), rng);
    for (int step = 0; step < 8; ++step) {
      const ElementId e = order[step];
      for (Position i = 1; i <= 3; ++i) {
        ASSERT_DOUBLE_EQ(state->ValueWith(e, i),
                         f.Evaluate(Assign(state->current(), e, i)));
      }
      state->Add(e, static_cast<Position>(1 + rng() % 3));
      ASSERT_DOUBLE_EQ(state->value(), f.Evaluate(state->current()));
    }
  }
}

TEST(LtObjectiveTest, DeterministicInSeed) {
  auto g = GenSocialGraph(40, 2, 2, 1);
  KSet x = Make(2, {{0, 1}, {5, 2}});
  EXPECT_EQ(LtSpreadEstimate(g, x, 200, 3), LtSpreadEstimate(g, x, 200, 3));
}

TEST(LtObjectiveTest, UnknownNode) {
  auto g = Graph(2, 1, {{0, 1}}, {1.0});
  ExpectCode(ErrorCode::kUnknownNode,
             [&] { LtSpreadEstimate(g, Make(1, {{7, 1}}), 10, 1); });
}

TEST(TopicGraphTest, Validation) {
  ExpectCode(ErrorCode::kWeightOutOfRange, [] { Graph(2, 1, {{0, 1}}, {1.5}); });
  ExpectCode(ErrorCode::kWeightOutOfRange, [] { Graph(2, 1, {{0, 1}}, {-0.1}); });
  ExpectCode(ErrorCode::kWeightOutOfRange,
             [] { Graph(3, 1, {{0, 2}, {1, 2}}, {0.6, 0.6}); });
  ExpectCode(ErrorCode::kUnknownNode, [] { Graph(2, 1, {{0, 5}}, {0.5}); });
  auto g = Graph(3, 2, {{0, 2}, {1, 2}}, {0.25, 0.5, 0.75, 0.5});
  EXPECT_DOUBLE_EQ(g->in_weight(2, 1), 1.0);
  EXPECT_DOUBLE_EQ(g->in_weight(2, 2), 1.0);
  EXPECT_EQ(g->in_degree(2), 2u);
  EXPECT_EQ(g->out_degree(0), 1u);
}

TEST(TopicGraphTest, DerivedWeightsRespectInSums) {
  std::vector<Edge> edges{{0, 1}, {2, 1}, {3, 1}, {1, 0}};
  std::vector<double> w = DeriveTopicWeights(4, edges, 2, 7);
  ASSERT_EQ(w.size(), 8u);
  for (int i = 0; i < 2; ++i) {
    double into1 = w[0 * 2 + i] + w[1 * 2 + i] + w[2 * 2 + i];
    EXPECT_LE(into1, 1.0 + 1e-12);
    for (std::size_t q = 0; q < 3; ++q) {
      EXPECT_GT(w[q * 2 + i], 0.0);
      EXPECT_LE(w[q * 2 + i], 1.2 / 3);
    }
  }
  std::vector<double> over{0.7, 0.7};
  std::vector<Edge> two{{0, 2}, {1, 2}};
  EXPECT_TRUE(RenormalizeInWeights(3, two, 1, over));
  EXPECT_DOUBLE_EQ(over[0] + over[1], 1.0);
  EXPECT_FALSE(RenormalizeInWeights(3, two, 1, over));
}

}  // namespace
}  // namespace ksub
