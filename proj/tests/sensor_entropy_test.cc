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

#include "ksub/sensor_entropy.h"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "ksub/data_io.h"
#include "ksub/error.h"
#include "ksub/verify.h"
#include "test_util.h"

namespace ksub {
namespace {

using testing::ExpectCode;
using testing::Make;

const double kUnitEntropy = 0.5 * std::log(2 * std::numbers::pi * std::numbers::e);

// ½ log((2πe)^m det Σ) from a cofactor-expansion determinant.
double Det(const std::vector<std::vector<double>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1.0;
  double out = 0;
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<std::vector<double>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<double> row;
      for (std::size_t q = 0; q < n; ++q) {
        if (q != c) row.push_back(m[r][q]);
      }
      minor.push_back(row);
    }
    out += (c % 2 ? -1 : 1) * m[0][c] * Det(minor);
  }
  return out;
}

double EntropyByCofactors(const Eigen::MatrixXd& cov, const std::vector<int>& vars) {
  std::vector<std::vector<double>> sub(vars.size(), std::vector<double>(vars.size()));
  for (std::size_t r = 0; r < vars.size(); ++r) {
    for (std::size_t c = 0; c < vars.size(); ++c) sub[r][c] = cov(vars[r], vars[c]);
  }
  return 0.5 * (vars.size() * std::log(2 * std::numbers::pi * std::numbers::e) +
                std::log(Det(sub)));
}

TEST(EntropyTest, ClosedForms) {
  GaussianEntropyObjective f({0, 1}, 2, Eigen::MatrixXd::Identity(4, 4));
  EXPECT_EQ(f.Evaluate(KSet(2)), 0.0);
  EXPECT_NEAR(f.Evaluate(Make(2, {{0, 1}})), 1.41894, 1e-5);
  EXPECT_NEAR(f.Evaluate(Make(2, {{0, 1}})), kUnitEntropy, 1e-12);
  EXPECT_NEAR(f.Evaluate(Make(2, {{0, 1}, {1, 2}})), 2.83788, 1e-5);

  // Variance s^2 adds log s.
  Eigen::MatrixXd cov = Eigen::MatrixXd::Identity(2, 2);
  cov(1, 1) = 4.0;
  GaussianEntropyObjective g({5}, 2, cov);
  EXPECT_NEAR(g.Evaluate(Make(2, {{5, 2}})), kUnitEntropy + std::log(2.0), 1e-12);
}

TEST(EntropyTest, MatchesCofactorDeterminant) {
  SensorTable table = GenSensorTable(5, 2, 80, 3);
  auto f = GaussianEntropyObjective::FromTable(table, 0.0);
  for (const KSet& x : testing::AllKSets(5, 2)) {
    std::vector<int> vars;
    for (const auto& [e, p] : x) vars.push_back(static_cast<int>(e) * 2 + p - 1);
    ASSERT_NEAR(f->Evaluate(x), EntropyByCofactors(f->covariance(), vars), 1e-8)
        << x.ToString();
  }
}

TEST(EntropyTest, EmpiricalCovarianceByHand) {
  SensorTable t;
  t.locations = {0};
  t.type_names = {"a", "b"};
  t.samples = 3;
  t.values = {1, 2, 3, 2, 4, 6};
  Eigen::MatrixXd cov = EmpiricalCovariance(t);
  EXPECT_DOUBLE_EQ(cov(0, 0), 1.0);
  EXPECT_DOUBLE_EQ(cov(1, 1), 4.0);
  EXPECT_DOUBLE_EQ(cov(0, 1), 2.0);
  t.samples = 1;
  t.values = {1, 2};
  ExpectCode(ErrorCode::kNoUsableRows, [&] { EmpiricalCovariance(t); });
}

TEST(EntropyTest, SingularWithoutRidge) {
  SensorTable t;
  t.locations = {0, 1};
  t.type_names = {"a", "b"};
  t.samples = 3;
  // Location 1 type a copies location 0 type a.
  t.values = {1, 2, 4, 0, 1, 0, 1, 2, 4, 3, 1, 2};
  auto raw = GaussianEntropyObjective::FromTable(t, 0.0);
  ExpectCode(ErrorCode::kSingularCovariance,
             [&] { raw->Evaluate(Make(2, {{0, 1}, {1, 1}})); });
  auto ridged = GaussianEntropyObjective::FromTable(t);
  EXPECT_TRUE(std::isfinite(ridged->Evaluate(Make(2, {{0, 1}, {1, 1}}))));
}

TEST(EntropyTest, IncrementalMatchesDirect) {
  SensorTable table = GenSensorTable(20, 3, 100, 9);
  auto f = GaussianEntropyObjective::FromTable(table);
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 10; ++trial) {
    auto state = f->Start();
    for (ElementId e = 0; e < 20; e += 1 + rng() % 3) {
      for (Position i = 1; i <= 3; ++i) {
        ASSERT_NEAR(state->ValueWith(e, i),
                    f->Evaluate(Assign(state->current(), e, i)), 1e-9);
      }
      state->Add(e, static_cast<Position>(1 + rng() % 3));
      ASSERT_NEAR(state->value(), f->Evaluate(state->current()), 1e-9);
    }
  }
}

TEST(EntropyTest, KSubmodularAndNonMonotone) {
  SensorTable table = GenSensorTable(5, 3, 200, 21);
  auto f = GaussianEntropyObjective::FromTable(table);
  const std::vector<ElementId> ids{0, 1, 2, 3, 4};
  KSubReport exhaustive = CheckKSubmodularity(*f, ids);
  EXPECT_TRUE(exhaustive.orthant_ok) << ReportToText(exhaustive);

  SensorTable big = GenSensorTable(30, 3, 200, 22);
  auto g = GaussianEntropyObjective::FromTable(big);
  std::vector<ElementId> all(30);
  for (ElementId e = 0; e < 30; ++e) all[e] = e;
  CheckOptions opt;
  opt.mode = CheckMode::kSampled;
  opt.seed = 5;
  opt.trials = 300;
  KSubReport sampled = CheckKSubmodularity(*g, all, opt);
  EXPECT_TRUE(sampled.orthant_ok) << ReportToText(sampled);
  EXPECT_TRUE(sampled.nonmonotone_witness.has_value());
}

TEST(EntropyTest, ArgumentErrors) {
  ExpectCode(ErrorCode::kInvalidInstance, [] {
    GaussianEntropyObjective({0, 1}, 2, Eigen::MatrixXd::Identity(3, 3));
  });
  GaussianEntropyObjective f({0}, 2, Eigen::MatrixXd::Identity(2, 2));
  ExpectCode(ErrorCode::kUnknownElement, [&] { f.Evaluate(Make(2, {{4, 1}})); });
}

}  // namespace
}  // namespace ksub
