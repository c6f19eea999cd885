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

#ifndef KSUB_COSTS_H_
#define KSUB_COSTS_H_

#include <map>
#include <vector>

#include "ksub/kset.h"
#include "ksub/lt_influence.h"
#include "ksub/sensor_entropy.h"

namespace ksub {

// Affine map of scores onto [lo, hi]: the smallest score costs lo, the
// largest hi. Constant scores all cost (lo + hi) / 2. Requires hi > lo > 0.
std::vector<double> NormalizedLinearCosts(const std::vector<double>& scores,
                                          double lo = 1.0, double hi = 10.0);
std::map<ElementId, double> NormalizedLinearCosts(
    const std::map<ElementId, double>& scores, double lo = 1.0,
    double hi = 10.0);

// Out-degree of every node, indexed by node id.
std::vector<double> OutDegreeScores(const TopicGraph& g);

// Per location, the mean sample variance of its readings over all types.
std::vector<double> ReadingVarianceScores(const SensorTable& table);

}  // namespace ksub

#endif  // KSUB_COSTS_H_
