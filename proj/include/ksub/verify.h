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

#ifndef KSUB_VERIFY_H_
#define KSUB_VERIFY_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>

#include "ksub/algorithms.h"
#include "ksub/instance.h"
#include "ksub/objective.h"

namespace ksub {

enum class CheckMode { kExhaustive, kSampled };

struct CheckOptions {
  CheckMode mode = CheckMode::kExhaustive;
  // Exhaustive mode: cap on (k+1)^n, the number of k-sets tabulated.
  std::uint64_t max_enum = kDefaultEnumerationCap;
  // Exhaustive mode: the join/meet inequality runs over all (k+1)^(2n)
  // ordered pairs only below this cap. Above it that check is skipped; the
  // orthant + pairwise checks alone are still a complete certificate.
  std::uint64_t max_pairs = std::uint64_t{1} << 24;
  // Sampled mode.
  std::uint64_t seed = 0;
  std::uint64_t trials = 2000;
  // A predicate fails when it is violated by more than
  // tolerance * max(1, largest |f| seen).
  double tolerance = 1e-9;
};

struct OrthantCounterexample {
  KSet x, y;
  ElementId e = 0;
  Position i = kUnassigned;
  double gain_x = 0.0, gain_y = 0.0;
};

struct PairwiseCounterexample {
  KSet x;
  ElementId e = 0;
  Position i = kUnassigned, j = kUnassigned;
  double gain_i = 0.0, gain_j = 0.0;
};

struct DefinitionCounterexample {
  KSet x, y;
  double lhs = 0.0;  // f(x) + f(y)
  double rhs = 0.0;  // f(x ⊓ y) + f(x ⊔ y)
};

struct NonMonotoneWitness {
  KSet x;
  ElementId e = 0;
  Position i = kUnassigned;
  double gain = 0.0;
};

struct KSubReport {
  CheckMode mode = CheckMode::kExhaustive;
  std::uint64_t seed = 0;
  std::uint64_t trials = 0;

  bool orthant_ok = true;
  std::optional<OrthantCounterexample> orthant_counterexample;
  std::uint64_t orthant_checked = 0;

  bool pairwise_ok = true;
  std::optional<PairwiseCounterexample> pairwise_counterexample;
  std::uint64_t pairwise_checked = 0;

  bool definition_checked = false;
  bool definition_ok = true;
  std::optional<DefinitionCounterexample> definition_counterexample;
  std::uint64_t definition_pairs_checked = 0;

  std::optional<NonMonotoneWitness> nonmonotone_witness;

  bool ksubmodular() const {
    return orthant_ok && pairwise_ok && definition_ok;
  }
};

// Checks orthant submodularity, pairwise monotonicity and the join/meet
// inequality of f restricted to `universe`, and looks for a negative
// marginal. Exhaustive mode throws kInstanceTooLarge when (k+1)^n exceeds
// options.max_enum. Predicate counts in exhaustive mode are
//   orthant:    n k (2k+1)^(n-1)      (x ⊑ y, e outside supp(y), i)
//   pairwise:   n (k+1)^(n-1) k(k-1)  (x, e outside supp(x), ordered i != j)
//   definition: (k+1)^(2n)            (ordered pairs)
KSubReport CheckKSubmodularity(const Objective& f,
                               std::span<const ElementId> universe,
                               const CheckOptions& options = {});
KSubReport CheckKSubmodularity(const Objective& f, const KnapsackInstance& inst,
                               const CheckOptions& options = {});

// Line-oriented human summary.
std::string ReportToText(const KSubReport& report);
// One "key=value" per line, stable key order.
std::string ReportToKeyValues(const KSubReport& report);

struct AuditOptions {
  std::uint64_t max_enum = kDefaultEnumerationCap;
  double tolerance = 1e-9;
};

struct LaaAudit {
  bool acceptance_ok = true;
  std::size_t accepted_events = 0;

  // f(x') >= f(x^t) / 3.
  bool suffix_ok = true;
  double full_value = 0.0;
  double packed_value = 0.0;

  // Filled in when the instance is small enough to enumerate.
  bool brute_forced = false;
  double opt = 0.0;
  double opt_cheap = 0.0;  // optimum over elements with c(e) <= B/2
  bool ratio_ok = true;    // f(result) >= opt / 19
  bool cheap_ok = true;    // f(x') >= opt_cheap / 18

  bool ok() const { return acceptance_ok && suffix_ok && ratio_ok && cheap_ok; }
};

// Replays an LAA trace against f from scratch. Throws kTraceMismatch when a
// recorded marginal or running value disagrees with the recomputation, or
// when an accepted event fails the acceptance test c(e) f(x) / B <= Δ.
LaaAudit AuditLaaTrace(const LaaOutcome& run, const KnapsackInstance& inst,
                       const Objective& f, const AuditOptions& options = {});

struct RlaAudit {
  bool brute_forced = false;
  double opt = 0.0;
  bool ratio_ok = true;       // f(final) >= (1/5 - eps) opt
  bool dominance_ok = true;   // f(final) >= f(s_b)
  bool feasibility_ok = true; // c(s_v) <= B for every guess, and the final
  bool bracket_ok = true;     // gamma <= v <= 19 gamma for every guess

  bool ok() const {
    return ratio_ok && dominance_ok && feasibility_ok && bracket_ok;
  }
};

RlaAudit AuditRla(const RlaOutcome& run, const KnapsackInstance& inst,
                  const Objective& f, double epsilon,
                  const AuditOptions& options = {});

}  // namespace ksub

#endif  // KSUB_VERIFY_H_
