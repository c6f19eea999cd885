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

#ifndef KSUB_COVERAGE_BONUS_H_
#define KSUB_COVERAGE_BONUS_H_

#include <cstdint>
#include <map>
#include <memory>
#include <vector>

#include "ksub/objective.h"

namespace ksub {

using ItemId = std::uint32_t;

// Coverage sets and per-position bonuses for CoverageBonusObjective.
// bonus[e] has exactly k entries, bonus[e][i-1] being w_{e,i}.
struct CoverageBonusSpec {
  int k = 2;
  std::map<ElementId, std::vector<ItemId>> coverage;
  std::map<ElementId, std::vector<double>> bonus;
};

// f(x) = |union of coverage(e) over supp(x)| + sum_e w_{e, x(e)}.
//
// Coverage does not depend on the position, so its marginal is nonnegative
// and shrinks as x grows; the bonus is a constant per (e, i). The function
// is therefore orthant submodular, and pairwise monotone exactly when
// w_{e,i} + w_{e,j} >= 0 for all i != j. Negative bonuses make it
// non-monotone.
class CoverageBonusObjective : public Objective {
 public:
  // Validating constructor. Throws kPairwiseViolation naming (e, i, j) when
  // some w_{e,i} + w_{e,j} < 0, kInvalidInstance for a malformed spec.
  explicit CoverageBonusObjective(CoverageBonusSpec spec);

  // Skips the pairwise check. Only for building deliberately broken
  // objectives in checker tests.
  static CoverageBonusObjective Unchecked(CoverageBonusSpec spec);

  int k() const override { return spec_.k; }
  bool Contains(ElementId e) const override;
  double Evaluate(const KSet& x) const override;
  std::unique_ptr<ObjectiveState> Start() const override;

  const CoverageBonusSpec& spec() const { return spec_; }
  double bonus(ElementId e, Position i) const;

 private:
  struct Row {
    std::vector<std::uint32_t> items;  // dense item indices
    std::vector<double> bonus;
  };
  class State;

  CoverageBonusObjective(CoverageBonusSpec spec, bool check);
  const Row& row(ElementId e) const;

  CoverageBonusSpec spec_;
  std::map<ElementId, Row> rows_;
  std::size_t item_count_ = 0;
};

// make_coverage_bonus in functional form.
std::unique_ptr<CoverageBonusObjective> MakeCoverageBonus(
    CoverageBonusSpec spec);

}  // namespace ksub

#endif  // KSUB_COVERAGE_BONUS_H_
