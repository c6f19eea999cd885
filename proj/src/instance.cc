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

#include "ksub/instance.h"

#include <cmath>
#include <string>

#include "ksub/error.h"

namespace ksub {

KnapsackInstance::KnapsackInstance(std::vector<ElementId> universe, int k,
                                   std::vector<double> costs, double budget)
    : universe_(std::move(universe)),
      k_(k),
      costs_(std::move(costs)),
      budget_(budget) {
  if (k_ < 2) {
    throw Error(ErrorCode::kInvalidInstance,
                "k must be at least 2, got " + std::to_string(k_));
  }
  if (!(budget_ > 0) || !std::isfinite(budget_)) {
    throw Error(ErrorCode::kInvalidInstance, "budget must be positive");
  }
  if (costs_.size() != universe_.size()) {
    throw Error(ErrorCode::kInvalidInstance, "cost vector length mismatch");
  }
  index_.reserve(universe_.size());
  for (std::size_t j = 0; j < universe_.size(); ++j) {
    if (!(costs_[j] > 0) || !std::isfinite(costs_[j])) {
      throw Error(ErrorCode::kInvalidInstance,
                  "cost of element " + std::to_string(universe_[j]) +
                      " must be positive");
    }
    if (!index_.emplace(universe_[j], j).second) {
      throw Error(ErrorCode::kInvalidInstance,
                  "duplicate element " + std::to_string(universe_[j]));
    }
  }
}

double KnapsackInstance::cost(ElementId e) const {
  auto it = index_.find(e);
  if (it == index_.end()) {
    throw Error(ErrorCode::kUnknownElement,
                "element " + std::to_string(e) + " not in the universe");
  }
  return costs_[it->second];
}

KnapsackInstance KnapsackInstance::WithBudget(double budget) const {
  return KnapsackInstance(universe_, k_, costs_, budget);
}

KnapsackInstance KnapsackInstance::Reordered(
    const std::vector<std::size_t>& order) const {
  if (order.size() != universe_.size()) {
    throw Error(ErrorCode::kInvalidInstance, "order length mismatch");
  }
  std::vector<ElementId> universe;
  std::vector<double> costs;
  universe.reserve(order.size());
  costs.reserve(order.size());
  for (std::size_t j : order) {
    universe.push_back(universe_.at(j));
    costs.push_back(costs_.at(j));
  }
  return KnapsackInstance(std::move(universe), k_, std::move(costs), budget_);
}

double TotalCost(const KSet& x, const KnapsackInstance& inst) {
  double total = 0.0;
  for (const auto& [e, p] : x) total += inst.cost(e);
  return total;
}

KnapsackInstance NormalizeInstance(const KnapsackInstance& inst) {
  std::vector<ElementId> universe;
  std::vector<double> costs;
  for (std::size_t j = 0; j < inst.n(); ++j) {
    if (inst.costs()[j] <= inst.budget()) {
      universe.push_back(inst.universe()[j]);
      costs.push_back(inst.costs()[j]);
    }
  }
  if (universe.empty()) {
    throw Error(ErrorCode::kEmptyUniverse,
                "every element costs more than the budget");
  }
  return KnapsackInstance(std::move(universe), inst.k(), std::move(costs),
                          inst.budget());
}

bool IsNormalized(const KnapsackInstance& inst) {
  for (double c : inst.costs()) {
    if (c > inst.budget()) return false;
  }
  return true;
}

}  // namespace ksub
