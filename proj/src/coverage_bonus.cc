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

#include "ksub/coverage_bonus.h"

#include <algorithm>
#include <string>
#include <unordered_map>

#include "ksub/error.h"

namespace ksub {

class CoverageBonusObjective::State : public ObjectiveState {
 public:
  explicit State(const CoverageBonusObjective& f)
      : f_(f), current_(f.k()), covered_(f.item_count_, 0) {}

  const KSet& current() const override { return current_; }
  double value() const override { return value_; }

  double ValueWith(ElementId e, Position i) override {
    f_.CheckExtension(current_, e, i);
    const Row& r = f_.row(e);
    std::int64_t fresh = 0;
    for (std::uint32_t item : r.items) fresh += covered_[item] == 0 ? 1 : 0;
    return value_ + (static_cast<double>(fresh) + r.bonus[i - 1]);
  }

  void Add(ElementId e, Position i) override {
    double v = ValueWith(e, i);
    const Row& r = f_.row(e);
    for (std::uint32_t item : r.items) ++covered_[item];
    current_.Insert(e, i);
    value_ = v;
  }

 private:
  const CoverageBonusObjective& f_;
  KSet current_;
  std::vector<std::uint32_t> covered_;
  double value_ = 0.0;
};

CoverageBonusObjective::CoverageBonusObjective(CoverageBonusSpec spec)
    : CoverageBonusObjective(std::move(spec), true) {}

CoverageBonusObjective CoverageBonusObjective::Unchecked(
    CoverageBonusSpec spec) {
  return CoverageBonusObjective(std::move(spec), false);
}

CoverageBonusObjective::CoverageBonusObjective(CoverageBonusSpec spec,
                                               bool check)
    : spec_(std::move(spec)) {
  if (spec_.k < 1) {
    throw Error(ErrorCode::kInvalidInstance, "coverage spec needs k >= 1");
  }
  std::unordered_map<ItemId, std::uint32_t> dense;
  auto dense_id = [&](ItemId item) {
    auto [it, inserted] =
        dense.emplace(item, static_cast<std::uint32_t>(dense.size()));
    return it->second;
  };
  // Elements may appear in either map; absent entries mean "no items" or
  // "all-zero bonus".
  for (const auto& [e, items] : spec_.coverage) {
    Row& r = rows_[e];
    for (ItemId item : items) r.items.push_back(dense_id(item));
  }
  for (const auto& [e, w] : spec_.bonus) {
    if (static_cast<int>(w.size()) != spec_.k) {
      throw Error(ErrorCode::kInvalidInstance,
                  "element " + std::to_string(e) + " has " +
                      std::to_string(w.size()) + " bonuses, expected " +
                      std::to_string(spec_.k));
    }
    rows_[e].bonus = w;
  }
  for (auto& [e, r] : rows_) {
    if (r.bonus.empty()) r.bonus.assign(spec_.k, 0.0);
    // Duplicate items inside one coverage set count once.
    std::sort(r.items.begin(), r.items.end());
    r.items.erase(std::unique(r.items.begin(), r.items.end()), r.items.end());
    if (!check) continue;
    for (int i = 1; i <= spec_.k; ++i) {
      for (int j = i + 1; j <= spec_.k; ++j) {
        if (r.bonus[i - 1] + r.bonus[j - 1] < 0) {
          throw Error(ErrorCode::kPairwiseViolation,
                      "w[" + std::to_string(e) + "," + std::to_string(i) +
                          "] + w[" + std::to_string(e) + "," +
                          std::to_string(j) + "] < 0");
        }
      }
    }
  }
  item_count_ = dense.size();
}

bool CoverageBonusObjective::Contains(ElementId e) const {
  return rows_.count(e) != 0;
}

const CoverageBonusObjective::Row& CoverageBonusObjective::row(
    ElementId e) const {
  auto it = rows_.find(e);
  if (it == rows_.end()) {
    throw Error(ErrorCode::kUnknownElement,
                "element " + std::to_string(e) + " outside the ground set");
  }
  return it->second;
}

double CoverageBonusObjective::bonus(ElementId e, Position i) const {
  return row(e).bonus.at(i - 1);
}

double CoverageBonusObjective::Evaluate(const KSet& x) const {
  CheckArgument(x);
  std::vector<char> seen(item_count_, 0);
  std::int64_t covered = 0;
  double bonus_sum = 0.0;
  for (const auto& [e, p] : x) {
    const Row& r = row(e);
    for (std::uint32_t item : r.items) {
      if (!seen[item]) {
        seen[item] = 1;
        ++covered;
      }
    }
    bonus_sum += r.bonus[p - 1];
  }
  return static_cast<double>(covered) + bonus_sum;
}

std::unique_ptr<ObjectiveState> CoverageBonusObjective::Start() const {
  return std::make_unique<State>(*this);
}

std::unique_ptr<CoverageBonusObjective> MakeCoverageBonus(
    CoverageBonusSpec spec) {
  return std::make_unique<CoverageBonusObjective>(std::move(spec));
}

}  // namespace ksub
