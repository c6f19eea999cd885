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

#include "ksub/verify.h"

#include <gtest/gtest.h>

#include <cmath>

#include "ksub/coverage_bonus.h"
#include "ksub/data_io.h"
#include "ksub/error.h"
#include "test_util.h"

namespace ksub {
namespace {

using testing::AllKSets;
using testing::ExpectCode;
using testing::Make;
using testing::ModularObjective;

std::uint64_t Pow(std::uint64_t base, std::size_t exp) {
  std::uint64_t out = 1;
  while (exp--) out *= base;
  return out;
}

std::vector<ElementId> Range(std::size_t n) {
  std::vector<ElementId> out(n);
  for (std::size_t e = 0; e < n; ++e) out[e] = static_cast<ElementId>(e);
  return out;
}

// Counts (x ⊑ y, e outside supp(y), i) by listing all pairs.
std::uint64_t ListOrthantTriples(int n, int k) {
  std::uint64_t count = 0;
  auto all = AllKSets(n, k);
  for (const KSet& x : all) {
    for (const KSet& y : all) {
      if (!IsSubKSet(x, y)) continue;
      count += static_cast<std::uint64_t>(n - static_cast<int>(y.size())) * k;
    }
  }
  return count;
}

class CountFormula : public ::testing::TestWithParam<std::pair<int, int>> {};

TEST_P(CountFormula, MatchesListing) {
  const auto [n, k] = GetParam();
  ModularObjective f(n, k, 1.0);
  KSubReport r = CheckKSubmodularity(f, Range(n));
  const std::uint64_t K = k;
  EXPECT_EQ(r.orthant_checked, n * K * Pow(2 * K + 1, n - 1));
  EXPECT_EQ(r.orthant_checked, ListOrthantTriples(n, k));
  EXPECT_EQ(r.pairwise_checked, n * Pow(K + 1, n - 1) * K * (K - 1));
  EXPECT_TRUE(r.definition_checked);
  EXPECT_EQ(r.definition_pairs_checked, Pow(K + 1, 2 * n));
  EXPECT_TRUE(r.ksubmodular());
  EXPECT_FALSE(r.nonmonotone_witness.has_value());
}

INSTANTIATE_TEST_SUITE_P(Small, CountFormula,
                         ::testing::Values(std::pair{1, 2}, std::pair{2, 2},
                                           std::pair{3, 2}, std::pair{3, 3},
                                           std::pair{4, 2}));

TEST(CheckTest, SignedCoverageBonusCertified) {
  CoverageBonusSpec spec;
  spec.k = 2;
  spec.coverage = {{0, {1}}, {1, {1, 2, 3}}, {2, {2}}, {3, {4}}};
  spec.bonus = {{0, {-1.0, 1.0}}, {1, {0.0, 0.0}}, {2, {0.5, -0.5}},
                {3, {0.0, 0.0}}};
  auto f = MakeCoverageBonus(spec);
  KSubReport r = CheckKSubmodularity(*f, Range(4));
  EXPECT_TRUE(r.ksubmodular()) << ReportToText(r);
  ASSERT_TRUE(r.nonmonotone_witness.has_value());
  const NonMonotoneWitness& w = *r.nonmonotone_witness;
  EXPECT_LT(f->Evaluate(Assign(w.x, w.e, w.i)) - f->Evaluate(w.x), 0.0);
}

TEST(CheckTest, PairwiseMutantFlagged) {
  CoverageBonusSpec spec;
  spec.k = 2;
  spec.coverage = {{0, {1}}, {1, {1, 2}}};
  spec.bonus = {{0, {-1.0, 0.0}}, {1, {0.0, 0.0}}};
  CoverageBonusObjective f = CoverageBonusObjective::Unchecked(spec);
  KSubReport r = CheckKSubmodularity(f, Range(2));
  EXPECT_FALSE(r.pairwise_ok);
  ASSERT_TRUE(r.pairwise_counterexample.has_value());
  const PairwiseCounterexample& cx = *r.pairwise_counterexample;
  EXPECT_EQ(cx.e, 0u);
  EXPECT_LT(cx.gain_i + cx.gain_j, 0.0);
  // Coverage of element 0 adds nothing there, only the bonuses remain.
  EXPECT_EQ(cx.gain_i + cx.gain_j, -1.0);
  EXPECT_FALSE(r.ksubmodular());
}

// f(x) = |supp(x)|^2 breaks diminishing returns.
class SquareObjective : public Objective {
 public:
  int k() const override { return 2; }
  bool Contains(ElementId e) const override { return e < 3; }
  double Evaluate(const KSet& x) const override {
    CheckArgument(x);
    return static_cast<double>(x.size() * x.size());
  }
};

TEST(CheckTest, OrthantMutantFlagged) {
  SquareObjective f;
  KSubReport r = CheckKSubmodularity(f, Range(3));
  EXPECT_FALSE(r.orthant_ok);
  ASSERT_TRUE(r.orthant_counterexample.has_value());
  const OrthantCounterexample& cx = *r.orthant_counterexample;
  EXPECT_TRUE(IsSubKSet(cx.x, cx.y));
  EXPECT_LT(cx.gain_x, cx.gain_y);
  EXPECT_FALSE(r.definition_ok);
}

TEST(CheckTest, SampledModeFindsMutantAndAcceptsValid) {
  SquareObjective bad;
  CheckOptions opt;
  opt.mode = CheckMode::kSampled;
  opt.seed = 7;
  opt.trials = 500;
  KSubReport r = CheckKSubmodularity(bad, Range(3), opt);
  EXPECT_EQ(r.mode, CheckMode::kSampled);
  EXPECT_FALSE(r.ksubmodular());

  InstanceBundle bundle = GenRandomInstance(10, 3, 9);
  auto f = MakeCoverageBonus(bundle.spec);
  EXPECT_TRUE(CheckKSubmodularity(*f, bundle.instance, opt).ksubmodular());
}

TEST(CheckTest, ExhaustiveCap) {
  ModularObjective f(12, 3, 1.0);
  CheckOptions opt;
  opt.max_enum = 1000;
  ExpectCode(ErrorCode::kInstanceTooLarge,
             [&] { CheckKSubmodularity(f, Range(12), opt); });
}

TEST(CheckTest, DefinitionSkippedAbovePairCap) {
  ModularObjective f(4, 2, 1.0);
  CheckOptions opt;
  opt.max_pairs = 10;
  KSubReport r = CheckKSubmodularity(f, Range(4), opt);
  EXPECT_FALSE(r.definition_checked);
  EXPECT_TRUE(r.ksubmodular());
}

TEST(CheckTest, GeneratedFamilyCertified) {
  for (std::uint64_t seed = 1; seed <= 8; ++seed) {
    InstanceBundle bundle = GenRandomInstance(4, 3, seed);
    auto f = MakeCoverageBonus(bundle.spec);
    KSubReport r = CheckKSubmodularity(*f, bundle.instance);
    ASSERT_TRUE(r.ksubmodular()) << seed << "\n" << ReportToText(r);
    ASSERT_TRUE(r.nonmonotone_witness.has_value()) << seed;
  }
}

TEST(ReportTest, KeyValuesAreStable) {
  ModularObjective f(2, 2, 1.0);
  KSubReport r = CheckKSubmodularity(f, Range(2));
  const std::string kv = ReportToKeyValues(r);
  EXPECT_EQ(kv, ReportToKeyValues(CheckKSubmodularity(f, Range(2))));
  EXPECT_NE(kv.find("pairwise_ok="), std::string::npos) << kv;
}

struct Example {
  KnapsackInstance inst{{0, 1, 2}, 2, {1.0, 2.0, 3.0}, 4.0};
  std::unique_ptr<CoverageBonusObjective> f = [] {
    CoverageBonusSpec spec;
    spec.k = 2;
    spec.coverage = {{0, {1}}, {1, {2, 3}}, {2, {1, 2, 3, 4}}};
    return MakeCoverageBonus(spec);
  }();
};

TEST(AuditTest, LaaExamplePasses) {
  Example ex;
  CountingOracle o(*ex.f);
  LaaOutcome run = RunLaa(ex.inst, o);
  LaaAudit audit = AuditLaaTrace(run, ex.inst, *ex.f);
  EXPECT_TRUE(audit.ok());
  EXPECT_TRUE(audit.brute_forced);
  EXPECT_EQ(audit.opt, 4.0);
  EXPECT_EQ(audit.accepted_events, 2u);
}

TEST(AuditTest, ForgedAcceptanceIsMismatch) {
  Example ex;
  CountingOracle o(*ex.f);
  LaaOutcome run = RunLaa(ex.inst, o);
  // Claim element 1 was accepted with a tiny marginal.
  run.trace[1].marginal = 0.1;
  ExpectCode(ErrorCode::kTraceMismatch, [&] { AuditLaaTrace(run, ex.inst, *ex.f); });

  LaaOutcome run2 = RunLaa(ex.inst, o);
  run2.trace[2].accepted = true;  // c = 3 > B/2
  ExpectCode(ErrorCode::kTraceMismatch,
             [&] { AuditLaaTrace(run2, ex.inst, *ex.f); });
}

TEST(AuditTest, EmptyInstanceIsVacuous) {
  KnapsackInstance empty({}, 2, {}, 1.0);
  ModularObjective f(0, 2, 1.0);
  LaaOutcome run(2);
  EXPECT_TRUE(AuditLaaTrace(run, empty, f).ok());
}

TEST(AuditTest, RlaExampleAndDegenerate) {
  Example ex;
  CountingOracle o(*ex.f);
  RlaOutcome run = RunRla(ex.inst, o, {.epsilon = 0.1});
  RlaAudit audit = AuditRla(run, ex.inst, *ex.f, 0.1);
  EXPECT_TRUE(audit.ok());
  EXPECT_EQ(audit.opt, 4.0);

  ModularObjective zero(3, 2, 0.0);
  KnapsackInstance inst({0, 1, 2}, 2, {1, 1, 1}, 2.0);
  CountingOracle oz(zero);
  RlaOutcome degenerate = RunRla(inst, oz);
  EXPECT_TRUE(degenerate.guesses.empty());
  EXPECT_TRUE(AuditRla(degenerate, inst, zero, 0.1).ok());
}

TEST(AuditTest, RandomizedSweep) {
  int passed = 0;
  for (std::uint64_t s = 0; s < 50; ++s) {
    const std::size_t n = 3 + s % 6;
    const int k = 2 + static_cast<int>(s % 2);
    InstanceBundle bundle = GenRandomInstance(n, k, 42 + s);
    KnapsackInstance inst = NormalizeInstance(bundle.instance);
    auto f = MakeCoverageBonus(bundle.spec);
    CountingOracle o(*f);
    RlaOutcome run = RunRla(inst, o, {.epsilon = 0.1});
    bool ok = AuditRla(run, inst, *f, 0.1).ok() &&
              AuditLaaTrace(run.laa, inst, *f).ok();
    passed += ok;
  }
  EXPECT_EQ(passed, 50);
}

}  // namespace
}  // namespace ksub
