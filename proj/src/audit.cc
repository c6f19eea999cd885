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

#include <algorithm>
#include <cmath>
#include <string>

#include "ksub/error.h"
#include "ksub/text.h"
#include "ksub/verify.h"

namespace ksub {
namespace {

bool Fits(std::size_t n, int k, std::uint64_t cap) {
  std::uint64_t total = 1;
  for (std::size_t j = 0; j < n; ++j) {
    if (total > cap / static_cast<std::uint64_t>(k + 1)) return false;
    total *= static_cast<std::uint64_t>(k + 1);
  }
  return true;
}

bool Near(double a, double b, double tol) {
  return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
}

[[noreturn]] void Mismatch(std::size_t event, const std::string& what) {
  throw Error(ErrorCode::kTraceMismatch,
              "trace event " + std::to_string(event) + ": " + what);
}

// Optimum over the elements with c(e) <= B/2 under the same budget.
double CheapOptimum(const KnapsackInstance& inst, const Objective& f,
                    std::uint64_t cap) {
  std::vector<ElementId> universe;
  std::vector<double> costs;
  for (std::size_t j = 0; j < inst.n(); ++j) {
    if (inst.costs()[j] <= inst.budget() / 2) {
      universe.push_back(inst.universe()[j]);
      costs.push_back(inst.costs()[j]);
    }
  }
  if (universe.empty()) return 0.0;
  KnapsackInstance cheap(std::move(universe), inst.k(), std::move(costs),
                         inst.budget());
  return BruteForceOpt(cheap, f, cap).value;
}

}  // namespace

LaaAudit AuditLaaTrace(const LaaOutcome& run, const KnapsackInstance& inst,
                       const Objective& f, const AuditOptions& options) {
  LaaAudit audit;
  if (inst.n() == 0 && run.trace.empty()) return audit;
  const double tol = options.tolerance;
  if (run.trace.size() != inst.n()) {
    Mismatch(run.trace.size(), "trace length differs from the universe size");
  }

  KSet x(inst.k());
  double fx = 0.0;
  double cost = 0.0;
  std::size_t next_accepted = 0;
  for (std::size_t q = 0; q < run.trace.size(); ++q) {
    const TraceEvent& ev = run.trace[q];
    if (ev.element != inst.universe()[q]) Mismatch(q, "out of stream order");
    const double c = inst.costs()[q];

    KSet single(inst.k());
    single.Insert(ev.element, ev.chosen_position);
    if (!Near(f.Evaluate(single), ev.singleton_value, tol)) {
      Mismatch(q, "singleton value differs from recomputation");
    }
    if (ev.marginal) {
      const double gain = f.Evaluate(Assign(x, ev.element, ev.chosen_position)) - fx;
      if (!Near(gain, *ev.marginal, tol)) {
        Mismatch(q, "marginal " + FormatDouble(*ev.marginal) +
                        " differs from recomputed " + FormatDouble(gain));
      }
    }
    if (ev.accepted) {
      if (!ev.marginal || c > inst.budget() / 2) {
        Mismatch(q, "accepted an element that was never eligible");
      }
      const double threshold = c * fx / inst.budget();
      if (*ev.marginal < threshold - tol * std::max(1.0, std::abs(threshold))) {
        Mismatch(q, "accepted with marginal " + FormatDouble(*ev.marginal) +
                        " below c(e) f(x)/B = " + FormatDouble(threshold));
      }
      if (next_accepted >= run.accepted.size() ||
          !(run.accepted[next_accepted] ==
            Tuple{ev.element, ev.chosen_position})) {
        Mismatch(q, "accepted event missing from the accepted sequence");
      }
      ++next_accepted;
      ++audit.accepted_events;
      x.Insert(ev.element, ev.chosen_position);
      fx = f.Evaluate(x);
      cost += c;
    }
    if (!Near(fx, ev.running_value, tol)) {
      Mismatch(q, "running value differs from recomputation");
    }
    if (!Near(cost, ev.running_cost, tol)) {
      Mismatch(q, "running cost differs from recomputation");
    }
  }
  if (next_accepted != run.accepted.size()) {
    Mismatch(run.trace.size(), "accepted sequence longer than the trace");
  }

  audit.full_value = fx;
  const KSet packed = SuffixPack(run.accepted, inst);
  if (!(packed == run.packed)) {
    Mismatch(run.trace.size(), "packed suffix differs from recomputation");
  }
  audit.packed_value = f.Evaluate(packed);
  audit.suffix_ok =
      audit.packed_value >=
      audit.full_value / 3 - tol * std::max(1.0, std::abs(audit.full_value));

  if (Fits(inst.n(), inst.k(), options.max_enum)) {
    audit.brute_forced = true;
    audit.opt = BruteForceOpt(inst, f, options.max_enum).value;
    audit.opt_cheap = CheapOptimum(inst, f, options.max_enum);
    const double value = f.Evaluate(run.result.solution);
    audit.ratio_ok = value >= audit.opt / 19 - tol * std::abs(audit.opt);
    audit.cheap_ok = audit.packed_value >=
                     audit.opt_cheap / 18 - tol * std::abs(audit.opt_cheap);
  }
  return audit;
}

RlaAudit AuditRla(const RlaOutcome& run, const KnapsackInstance& inst,
                  const Objective& f, double epsilon,
                  const AuditOptions& options) {
  RlaAudit audit;
  const double tol = options.tolerance;
  const double final_value = f.Evaluate(run.result.solution);
  const double base_value = f.Evaluate(run.laa.result.solution);

  audit.dominance_ok =
      final_value >= base_value - tol * std::max(1.0, std::abs(base_value));
  audit.feasibility_ok = TotalCost(run.result.solution, inst) <= inst.budget();
  for (const RlaGuess& g : run.guesses) {
    if (TotalCost(g.solution, inst) > inst.budget()) audit.feasibility_ok = false;
    if (g.v < run.gamma || g.v > 19 * run.gamma) audit.bracket_ok = false;
  }
  if (Fits(inst.n(), inst.k(), options.max_enum)) {
    audit.brute_forced = true;
    audit.opt = BruteForceOpt(inst, f, options.max_enum).value;
    audit.ratio_ok = final_value >= (0.2 - epsilon) * audit.opt -
                                        tol * std::abs(audit.opt);
  }
  return audit;
}

}  // namespace ksub
