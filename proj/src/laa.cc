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

#include <chrono>
#include <limits>
#include <string>

#include "ksub/algorithms.h"
#include "ksub/error.h"
#include "ksub/text.h"

namespace ksub {

std::size_t SuffixLength(std::span<const Tuple> seq,
                         const KnapsackInstance& inst) {
  // Suffix cost only grows with j, so the longest affordable suffix is also
  // the costliest one.
  double cost = 0.0;
  std::size_t j = 0;
  for (auto it = seq.rbegin(); it != seq.rend(); ++it) {
    double next = cost + inst.cost(it->element);
    if (next > inst.budget()) break;
    cost = next;
    ++j;
  }
  return j;
}

KSet SuffixPack(std::span<const Tuple> seq, const KnapsackInstance& inst) {
  std::size_t j = SuffixLength(seq, inst);
  KSet out(inst.k());
  for (std::size_t q = seq.size() - j; q < seq.size(); ++q) {
    out.Insert(seq[q].element, seq[q].position);
  }
  return out;
}

LaaOutcome RunLaa(const KnapsackInstance& inst, CountingOracle& f,
                  TieBreak tie_break) {
  if (inst.n() == 0) {
    throw Error(ErrorCode::kEmptyUniverse, "LAA needs a nonempty universe");
  }
  if (!IsNormalized(inst)) {
    throw Error(ErrorCode::kInvalidInstance,
                "LAA expects a normalized instance (all costs <= B)");
  }
  if (f.k() != inst.k()) {
    throw Error(ErrorCode::kMismatchedK, "objective and instance disagree on k");
  }
  const auto start = std::chrono::steady_clock::now();
  const std::uint64_t queries_before = f.queries();
  const int k = inst.k();
  const double budget = inst.budget();

  LaaOutcome out(k);
  out.trace.reserve(inst.n());
  CountingOracle::Cursor x = f.Open();
  CountingOracle::Cursor empty = f.Open();
  std::vector<double> accepted_singletons;
  double x_cost = 0.0;
  bool have_best = false;

  for (std::size_t j = 0; j < inst.n(); ++j) {
    const ElementId e = inst.universe()[j];
    const double c = inst.costs()[j];

    // While x is still empty it doubles as the singleton probe, which makes
    // the first marginal free.
    CountingOracle::Cursor& probe = x.current().empty() ? x : empty;
    Position best_pos = kUnassigned;
    double best_val = -std::numeric_limits<double>::infinity();
    for (Position i = 1; i <= k; ++i) {
      double v = probe.ValueWith(e, i);
      bool better = tie_break == TieBreak::kLowestPosition ? v > best_val
                                                           : v >= best_val;
      if (best_pos == kUnassigned || better) {
        best_pos = i;
        best_val = v;
      }
    }

    if (!have_best || best_val > out.best_singleton_value) {
      out.best_singleton = Tuple{e, best_pos};
      out.best_singleton_value = best_val;
      have_best = true;
    }

    TraceEvent ev;
    ev.element = e;
    ev.chosen_position = best_pos;
    ev.singleton_value = best_val;
    if (c <= budget / 2) {
      const double fx = x.value();
      const double gain =
          x.current().empty() ? best_val - fx : x.Gain(e, best_pos);
      const double threshold = c * fx / budget;
      ev.marginal = gain;
      ev.threshold = threshold;
      if (gain >= threshold) {
        x.Add(e, best_pos);
        x_cost += c;
        out.accepted.push_back(Tuple{e, best_pos});
        accepted_singletons.push_back(best_val);
        ev.accepted = true;
      }
    }
    ev.running_cost = x_cost;
    ev.running_value = x.value();
    out.trace.push_back(ev);
  }

  out.full_value = x.value();
  const std::size_t t = out.accepted.size();
  const std::size_t kept = SuffixLength(out.accepted, inst);
  out.packed = SuffixPack(out.accepted, inst);
  if (kept == t) {
    out.packed_value = out.full_value;
  } else if (kept == 1) {
    out.packed_value = accepted_singletons.back();
  } else {
    out.packed_value = f.Evaluate(out.packed);
  }

  KSet singleton(k);
  singleton.Insert(out.best_singleton.element, out.best_singleton.position);
  out.chose_singleton = !(out.packed_value > out.best_singleton_value);
  out.result.solution = out.chose_singleton ? singleton : out.packed;

  out.result.queries = f.queries() - queries_before;
  out.result.wall_time = std::chrono::duration_cast<std::chrono::nanoseconds>(
      std::chrono::steady_clock::now() - start);
  out.result.value = f.objective().Evaluate(out.result.solution);
  out.result.cost = TotalCost(out.result.solution, inst);
  out.result.algorithm = "laa";
  out.result.params = {{"B", FormatDouble(budget)},
                       {"k", std::to_string(k)},
                       {"n", std::to_string(inst.n())}};
  return out;
}

}  // namespace ksub
