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

#ifndef KSUB_INSTANCE_H_
#define KSUB_INSTANCE_H_

#include <unordered_map>
#include <vector>

#include "ksub/kset.h"

namespace ksub {

// Ground set in stream order, per-element costs, the number of positions k
// and the knapsack budget B.
class KnapsackInstance {
 public:
  // Throws kInvalidInstance on k < 2, B <= 0, non-positive or non-finite
  // costs, duplicate elements, or a cost vector of the wrong length.
  KnapsackInstance(std::vector<ElementId> universe, int k,
                   std::vector<double> costs, double budget);

  const std::vector<ElementId>& universe() const { return universe_; }
  const std::vector<double>& costs() const { return costs_; }
  int k() const { return k_; }
  double budget() const { return budget_; }
  std::size_t n() const { return universe_.size(); }

  bool contains(ElementId e) const { return index_.count(e) != 0; }

  // Throws kUnknownElement.
  double cost(ElementId e) const;

  // Same elements and costs under a different budget.
  KnapsackInstance WithBudget(double budget) const;

  // Same elements and costs in a different stream order. `order` holds
  // indices into universe().
  KnapsackInstance Reordered(const std::vector<std::size_t>& order) const;

  friend bool operator==(const KnapsackInstance& a,
                         const KnapsackInstance& b) {
    return a.universe_ == b.universe_ && a.k_ == b.k_ &&
           a.costs_ == b.costs_ && a.budget_ == b.budget_;
  }

 private:
  std::vector<ElementId> universe_;
  int k_;
  std::vector<double> costs_;
  double budget_;
  std::unordered_map<ElementId, std::size_t> index_;
};

// c(x): sum of costs over supp(x). Throws kUnknownElement.
double TotalCost(const KSet& x, const KnapsackInstance& inst);

// Drops every element with c(e) > B, keeping stream order. Throws
// kEmptyUniverse when nothing survives.
KnapsackInstance NormalizeInstance(const KnapsackInstance& inst);

bool IsNormalized(const KnapsackInstance& inst);

}  // namespace ksub

#endif  // KSUB_INSTANCE_H_
