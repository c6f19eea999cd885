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

#ifndef KSUB_TESTS_TEST_UTIL_H_
#define KSUB_TESTS_TEST_UTIL_H_

#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <set>
#include <vector>

#include "ksub/error.h"
#include "ksub/instance.h"
#include "ksub/kset.h"
#include "ksub/objective.h"

namespace ksub::testing {

inline KSet Make(int k, const std::vector<Tuple>& tuples) {
  return KSet(k, tuples);
}

// Every k-set over elements 0..n-1, in mixed-radix order.
inline std::vector<KSet> AllKSets(int n, int k) {
  std::vector<KSet> out;
  std::vector<int> digits(n, 0);
  while (true) {
    KSet x(k);
    for (int e = 0; e < n; ++e) {
      if (digits[e]) x.Insert(e, digits[e]);
    }
    out.push_back(x);
    int j = 0;
    while (j < n && ++digits[j] > k) digits[j++] = 0;
    if (j == n) break;
  }
  return out;
}

inline void ExpectCode(ErrorCode code, const std::function<void()>& fn) {
  try {
    fn();
    ADD_FAILURE() << "expected " << ErrorCodeName(code);
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), code) << e.what();
  }
}

// f(x) = weight * |supp(x)| over elements 0..n-1. weight 0 gives f = 0.
class ModularObjective : public Objective {
 public:
  ModularObjective(int n, int k, double weight)
      : n_(n), k_(k), weight_(weight) {}
  int k() const override { return k_; }
  bool Contains(ElementId e) const override {
    return e < static_cast<ElementId>(n_);
  }
  double Evaluate(const KSet& x) const override {
    CheckArgument(x);
    return weight_ * static_cast<double>(x.size());
  }

 private:
  int n_, k_;
  double weight_;
};

// Exhaustive optimum over inst.universe(), by brute listing.
inline double ListOpt(const KnapsackInstance& inst, const Objective& f) {
  double best = 0.0;
  for (const KSet& idx : AllKSets(static_cast<int>(inst.n()), inst.k())) {
    KSet x(inst.k());
    for (const auto& [j, p] : idx) x.Insert(inst.universe()[j], p);
    if (TotalCost(x, inst) <= inst.budget()) best = std::max(best, f.Evaluate(x));
  }
  return best;
}

}  // namespace ksub::testing

#endif  // KSUB_TESTS_TEST_UTIL_H_
