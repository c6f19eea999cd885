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

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "ksub/error.h"

namespace ksub {
namespace {

// log(2πe), the per-dimension constant of Gaussian differential entropy.
const double kLogTwoPiE = std::log(2.0 * M_PI * M_E);

}  // namespace

Eigen::MatrixXd EmpiricalCovariance(const SensorTable& table) {
  const std::size_t vars = table.locations.size() * table.types();
  const std::size_t t_count = table.samples;
  if (t_count < 2) {
    throw Error(ErrorCode::kNoUsableRows,
                "covariance needs at least two aligned samples");
  }
  Eigen::MatrixXd data(t_count, vars);
  for (std::size_t v = 0; v < vars; ++v) {
    for (std::size_t t = 0; t < t_count; ++t) {
      data(t, v) = table.values[v * t_count + t];
    }
  }
  Eigen::RowVectorXd mean = data.colwise().mean();
  Eigen::MatrixXd centered = data.rowwise() - mean;
  return (centered.transpose() * centered) / static_cast<double>(t_count - 1);
}

GaussianEntropyObjective::GaussianEntropyObjective(
    std::vector<ElementId> locations, int k, Eigen::MatrixXd covariance)
    : locations_(std::move(locations)), k_(k), covariance_(std::move(covariance)) {
  const auto vars = static_cast<Eigen::Index>(locations_.size() * k_);
  if (k_ < 1 || covariance_.rows() != vars || covariance_.cols() != vars) {
    throw Error(ErrorCode::kInvalidInstance,
                "covariance must be (locations * k) square");
  }
  location_index_.resize(locations_.size());
  std::iota(location_index_.begin(), location_index_.end(), 0);
  std::sort(location_index_.begin(), location_index_.end(),
            [&](int a, int b) { return locations_[a] < locations_[b]; });
  for (int idx : location_index_) sorted_ids_.push_back(locations_[idx]);
  if (std::adjacent_find(sorted_ids_.begin(), sorted_ids_.end()) !=
      sorted_ids_.end()) {
    throw Error(ErrorCode::kInvalidInstance, "duplicate location id");
  }
}

std::unique_ptr<GaussianEntropyObjective> GaussianEntropyObjective::FromTable(
    const SensorTable& table, double ridge) {
  Eigen::MatrixXd cov = EmpiricalCovariance(table);
  if (ridge > 0) {
    const double mean_diag = cov.diagonal().mean();
    cov.diagonal().array() += ridge * mean_diag;
  }
  return std::make_unique<GaussianEntropyObjective>(
      table.locations, static_cast<int>(table.types()), std::move(cov));
}

bool GaussianEntropyObjective::Contains(ElementId e) const {
  return std::binary_search(sorted_ids_.begin(), sorted_ids_.end(), e);
}

int GaussianEntropyObjective::Variable(ElementId e, Position i) const {
  auto it = std::lower_bound(sorted_ids_.begin(), sorted_ids_.end(), e);
  const int loc = location_index_[it - sorted_ids_.begin()];
  return loc * k_ + (i - 1);
}

double GaussianEntropyObjective::Evaluate(const KSet& x) const {
  CheckArgument(x);
  if (x.empty()) return 0.0;
  std::vector<int> vars;
  vars.reserve(x.size());
  for (const auto& [e, p] : x) vars.push_back(Variable(e, p));
  const auto m = static_cast<Eigen::Index>(vars.size());
  Eigen::MatrixXd sub(m, m);
  for (Eigen::Index a = 0; a < m; ++a) {
    for (Eigen::Index b = 0; b < m; ++b) sub(a, b) = covariance_(vars[a], vars[b]);
  }
  Eigen::LLT<Eigen::MatrixXd> llt(sub);
  if (llt.info() != Eigen::Success) {
    throw Error(ErrorCode::kSingularCovariance,
                "covariance of " + x.ToString() + " is not positive definite");
  }
  const double log_det =
      2.0 * llt.matrixLLT().diagonal().array().log().sum();
  return 0.5 * (static_cast<double>(m) * kLogTwoPiE + log_det);
}

// Grows a Cholesky factor of Σ_S one variable at a time:
// H(S + v) = H(S) + ½ log(2πe · Var(v | S)).
class GaussianEntropyObjective::State : public ObjectiveState {
 public:
  explicit State(const GaussianEntropyObjective& f) : f_(f), current_(f.k()) {}

  const KSet& current() const override { return current_; }
  double value() const override { return value_; }

  double ValueWith(ElementId e, Position i) override {
    f_.CheckExtension(current_, e, i);
    const int v = f_.Variable(e, i);
    const double d = ConditionalVariance(v);
    return value_ + 0.5 * (kLogTwoPiE + std::log(d));
  }

  void Add(ElementId e, Position i) override {
    f_.CheckExtension(current_, e, i);
    const int v = f_.Variable(e, i);
    const double d = ConditionalVariance(v);
    const auto m = static_cast<Eigen::Index>(vars_.size());
    Eigen::MatrixXd grown = Eigen::MatrixXd::Zero(m + 1, m + 1);
    grown.topLeftCorner(m, m) = chol_;
    grown.block(m, 0, 1, m) = y_.transpose();
    grown(m, m) = std::sqrt(d);
    chol_ = std::move(grown);
    vars_.push_back(v);
    value_ += 0.5 * (kLogTwoPiE + std::log(d));
    current_.Insert(e, i);
  }

 private:
  // Var(v | S) = Σ_vv - |L^{-1} Σ_Sv|^2; leaves L^{-1} Σ_Sv in y_.
  double ConditionalVariance(int v) {
    const auto m = static_cast<Eigen::Index>(vars_.size());
    Eigen::VectorXd b(m);
    for (Eigen::Index a = 0; a < m; ++a) b(a) = f_.covariance_(vars_[a], v);
    y_ = m == 0 ? Eigen::VectorXd()
                : Eigen::VectorXd(
                      chol_.triangularView<Eigen::Lower>().solve(b));
    const double d = f_.covariance_(v, v) - y_.squaredNorm();
    if (!(d > 0)) {
      throw Error(ErrorCode::kSingularCovariance,
                  "conditional variance " + std::to_string(d) +
                      " is not positive");
    }
    return d;
  }

  const GaussianEntropyObjective& f_;
  KSet current_;
  std::vector<int> vars_;
  Eigen::MatrixXd chol_;
  Eigen::VectorXd y_;
  double value_ = 0.0;
};

std::unique_ptr<ObjectiveState> GaussianEntropyObjective::Start() const {
  return std::make_unique<State>(*this);
}

}  // namespace ksub
