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

#ifndef KSUB_SENSOR_ENTROPY_H_
#define KSUB_SENSOR_ENTROPY_H_

#include <memory>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "ksub/objective.h"

namespace ksub {

// Aligned readings: for every location and measurement type, `samples`
// values taken at the same sample indices.
struct SensorTable {
  std::vector<ElementId> locations;
  std::vector<std::string> type_names;
  std::size_t samples = 0;
  // values[(loc * types + type) * samples + t]
  std::vector<double> values;

  std::size_t types() const { return type_names.size(); }
  double at(std::size_t loc, std::size_t type, std::size_t t) const {
    return values[(loc * types() + type) * samples + t];
  }
};

// Sample covariance of all (location, type) variables, indexed
// loc * types + type.
Eigen::MatrixXd EmpiricalCovariance(const SensorTable& table);

// f(x) = H(R_x) for the Gaussian vector of variables chosen by x: location e
// read by a sensor of type x(e). H(S) = ½ log((2πe)^|S| det Σ_S), so f of the
// empty set is 0. Entropy can drop when a low-variance variable is added, so
// f is generally non-monotone.
class GaussianEntropyObjective : public Objective {
 public:
  // `covariance` is (|locations| k) square, variable index loc * k + (i-1).
  GaussianEntropyObjective(std::vector<ElementId> locations, int k,
                           Eigen::MatrixXd covariance);

  // Empirical covariance plus ridge * mean(diag) on the diagonal. ridge = 0
  // disables regularization; then a singular Σ_S raises kSingularCovariance.
  static std::unique_ptr<GaussianEntropyObjective> FromTable(
      const SensorTable& table, double ridge = 1e-6);

  int k() const override { return k_; }
  bool Contains(ElementId e) const override;
  double Evaluate(const KSet& x) const override;
  std::unique_ptr<ObjectiveState> Start() const override;

  const Eigen::MatrixXd& covariance() const { return covariance_; }

 private:
  class State;
  int Variable(ElementId e, Position i) const;

  std::vector<ElementId> locations_;
  std::vector<int> location_index_;  // sorted by element id; see Variable
  std::vector<ElementId> sorted_ids_;
  int k_;
  Eigen::MatrixXd covariance_;
};

}  // namespace ksub

#endif  // KSUB_SENSOR_ENTROPY_H_
