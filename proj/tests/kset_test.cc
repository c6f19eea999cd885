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

#include "ksub/kset.h"

#include <gtest/gtest.h>

#include <vector>

#include "ksub/error.h"
#include "ksub/instance.h"
#include "test_util.h"

namespace ksub {
namespace {

using testing::AllKSets;
using testing::ExpectCode;
using testing::Make;

constexpr ElementId a = 0, b = 1, c = 2, z = 25;

TEST(AssignTest, ExtendsEmptyAndDisjoint) {
  KSet empty(2);
  KSet one = Assign(empty, a, 1);
  EXPECT_EQ(one, Make(2, {{a, 1}}));
  EXPECT_TRUE(empty.empty());  // value semantics
  EXPECT_EQ(Assign(one, b, 2), Make(2, {{a, 1}, {b, 2}}));
}

TEST(AssignTest, RejectsAssignedElementAndBadPosition) {
  KSet one = Make(2, {{a, 1}});
  ExpectCode(ErrorCode::kElementAlreadyAssigned, [&] { Assign(one, a, 2); });
  ExpectCode(ErrorCode::kPositionOutOfRange, [&] { Assign(one, b, 3); });
  ExpectCode(ErrorCode::kPositionOutOfRange, [&] { Assign(one, b, 0); });
}

TEST(KSetTest, AccessorsAndText) {
  KSet x = Make(3, {{c, 3}, {a, 1}});
  EXPECT_EQ(x.size(), 2u);
  EXPECT_EQ(x.at(a), 1);
  EXPECT_EQ(x.at(b), kUnassigned);
  EXPECT_TRUE(x.contains(c));
  EXPECT_EQ(x.Subset(3), std::vector<ElementId>{c});
  EXPECT_TRUE(x.Subset(2).empty());
  EXPECT_EQ(x.Support(), (std::vector<ElementId>{a, c}));
  EXPECT_EQ(x.ToString(), "{(0,1),(2,3)}");
  x.Erase(a);
  EXPECT_EQ(x, Make(3, {{c, 3}}));
}

TEST(JoinTest, Examples) {
  EXPECT_EQ(Join(Make(2, {{a, 1}}), KSet(2)), Make(2, {{a, 1}}));
  EXPECT_EQ(Join(Make(2, {{a, 1}, {b, 2}}), Make(2, {{a, 1}, {c, 1}})),
            Make(2, {{a, 1}, {b, 2}, {c, 1}}));
  // Conflicting positions cancel.
  EXPECT_TRUE(Join(Make(2, {{a, 1}}), Make(2, {{a, 2}})).empty());
}

TEST(MeetTest, Examples) {
  KSet x = Make(2, {{a, 1}, {b, 2}});
  EXPECT_EQ(Meet(x, x), x);
  EXPECT_EQ(Meet(x, Make(2, {{a, 1}, {b, 1}})), Make(2, {{a, 1}}));
  EXPECT_TRUE(Meet(Make(2, {{a, 1}}), Make(2, {{a, 2}})).empty());
}

TEST(LatticeTest, MismatchedK) {
  ExpectCode(ErrorCode::kMismatchedK, [] { Join(KSet(2), KSet(3)); });
  ExpectCode(ErrorCode::kMismatchedK, [] { Meet(KSet(2), KSet(3)); });
  ExpectCode(ErrorCode::kMismatchedK, [] { IsSubKSet(KSet(2), KSet(3)); });
}

// Join and meet recomputed from the tuple-of-sets definition.
KSet JoinFromSets(const KSet& x, const KSet& y, int n) {
  KSet z(x.k());
  for (int i = 1; i <= x.k(); ++i) {
    for (int e = 0; e < n; ++e) {
      bool in_i = x.at(e) == i || y.at(e) == i;
      bool elsewhere = (x.at(e) != kUnassigned && x.at(e) != i) ||
                       (y.at(e) != kUnassigned && y.at(e) != i);
      if (in_i && !elsewhere) z.Insert(e, i);
    }
  }
  return z;
}

class LatticeIdentities : public ::testing::TestWithParam<std::pair<int, int>> {};

TEST_P(LatticeIdentities, HoldForAllPairs) {
  const auto [n, k] = GetParam();
  const std::vector<KSet> all = AllKSets(n, k);
  const KSet empty(k);
  for (const KSet& x : all) {
    ASSERT_EQ(Join(x, empty), x);
    ASSERT_TRUE(Meet(x, empty).empty());
    for (const KSet& y : all) {
      const KSet j = Join(x, y), m = Meet(x, y);
      ASSERT_EQ(j, Join(y, x));
      ASSERT_EQ(m, Meet(y, x));
      ASSERT_EQ(j, JoinFromSets(x, y, n));
      for (const auto& [e, p] : m) {
        ASSERT_EQ(x.at(e), p);
        ASSERT_EQ(y.at(e), p);
      }
      for (const auto& [e, p] : j) {
        ASSERT_TRUE(x.at(e) == p || y.at(e) == p);
      }
      ASSERT_TRUE(IsSubKSet(m, x));
      ASSERT_TRUE(IsSubKSet(m, y));
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Small, LatticeIdentities,
                         ::testing::Values(std::pair{2, 2}, std::pair{3, 2},
                                           std::pair{3, 3}, std::pair{4, 2},
                                           std::pair{4, 3}));

TEST(SubKSetTest, Order) {
  EXPECT_TRUE(IsSubKSet(KSet(2), Make(2, {{a, 1}})));
  EXPECT_TRUE(IsSubKSet(Make(2, {{a, 1}}), Make(2, {{a, 1}, {b, 2}})));
  EXPECT_FALSE(IsSubKSet(Make(2, {{a, 2}}), Make(2, {{a, 1}, {b, 2}})));
  EXPECT_FALSE(IsSubKSet(Make(2, {{a, 1}, {b, 2}}), Make(2, {{a, 1}})));
}

TEST(InstanceTest, TotalCost) {
  KnapsackInstance inst({a, b}, 2, {1.0, 2.0}, 4.0);
  EXPECT_EQ(TotalCost(KSet(2), inst), 0.0);
  EXPECT_EQ(TotalCost(Make(2, {{a, 1}, {b, 2}}), inst), 3.0);
  ExpectCode(ErrorCode::kUnknownElement,
             [&] { TotalCost(Make(2, {{z, 1}}), inst); });
}

TEST(InstanceTest, Normalize) {
  KnapsackInstance keep({a, b}, 2, {1.0, 2.0}, 4.0);
  EXPECT_EQ(NormalizeInstance(keep), keep);
  EXPECT_TRUE(IsNormalized(keep));

  KnapsackInstance drop({a, b}, 2, {1.0, 9.0}, 4.0);
  EXPECT_FALSE(IsNormalized(drop));
  KnapsackInstance n = NormalizeInstance(drop);
  EXPECT_EQ(n.universe(), std::vector<ElementId>{a});
  EXPECT_EQ(n.budget(), 4.0);

  KnapsackInstance none({a}, 2, {9.0}, 4.0);
  ExpectCode(ErrorCode::kEmptyUniverse, [&] { NormalizeInstance(none); });
}

TEST(InstanceTest, NormalizeKeepsStreamOrder) {
  KnapsackInstance inst({c, a, z, b}, 2, {1.0, 5.0, 2.0, 3.0}, 3.0);
  EXPECT_EQ(NormalizeInstance(inst).universe(), (std::vector<ElementId>{c, z, b}));
}

TEST(InstanceTest, Validation) {
  ExpectCode(ErrorCode::kInvalidInstance,
             [] { KnapsackInstance({a}, 1, {1.0}, 1.0); });
  ExpectCode(ErrorCode::kInvalidInstance,
             [] { KnapsackInstance({a}, 2, {0.0}, 1.0); });
  ExpectCode(ErrorCode::kInvalidInstance,
             [] { KnapsackInstance({a}, 2, {1.0}, 0.0); });
  ExpectCode(ErrorCode::kInvalidInstance,
             [] { KnapsackInstance({a, a}, 2, {1.0, 1.0}, 1.0); });
  ExpectCode(ErrorCode::kInvalidInstance,
             [] { KnapsackInstance({a, b}, 2, {1.0}, 1.0); });
}

TEST(InstanceTest, ReorderedAndWithBudget) {
  KnapsackInstance inst({a, b, c}, 3, {1.0, 2.0, 3.0}, 4.0);
  KnapsackInstance r = inst.Reordered({2, 0, 1});
  EXPECT_EQ(r.universe(), (std::vector<ElementId>{c, a, b}));
  EXPECT_EQ(r.costs(), (std::vector<double>{3.0, 1.0, 2.0}));
  EXPECT_EQ(r.cost(a), 1.0);
  EXPECT_EQ(inst.WithBudget(10.0).budget(), 10.0);
  EXPECT_EQ(inst.WithBudget(10.0).universe(), inst.universe());
}

}  // namespace
}  // namespace ksub
