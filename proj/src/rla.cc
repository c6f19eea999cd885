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
#include <cmath>
#include <limits>
#include <string>

#include "ksub/algorithms.h"
#include "ksub/error.h"
#include "ksub/text.h"

namespace ksub {

// Upper end of the bracket opt <= 19 * f(LAA).
constexpr double kLaaRatio = 19.0;

std::vector<double> GuessSet(double gamma, double epsilon) {
  std::vector<double> out;
  if (!(gamma > 0) || !std::isfinite(gamma)) return out;
  const double base = 1.0 + epsilon;
  const double upper = kLaaRatio * gamma;
  // Integer exponents of either sign, so the grid does not depend on the
  // scale of f.
  long long lo = static_cast<long long>(std::ceil(std::log(gamma) /
                                                  std::log(base)));
  while (std::pow(base, static_cast<double>(lo - 1)) >= gamma) --lo;
  while (std::pow(base, static_cast<double>(lo)) < gamma) ++lo;
  for (long long i = lo;; ++i) {
    double v = std::pow(base, static_cast<double>(i));
    if (v > upper) break;
    out.push_back(v);
  }
  return out;
}

RlaOutcome RunRla(const KnapsackInstance& inst, CountingOracle& f,
                  const RlaOptions& options) {
  const double eps = options.epsilon;
  if (!(eps > 0.0 && eps < 0.2)) {
    throw Error(ErrorCode::kEpsilonOutOfRange,
                "epsilon must lie in (0, 1/5), got " + FormatDouble(eps));
  }
  const auto start = std::chrono::steady_clock::now();
  const std::uint64_t queries_before = f.queries();
  const int k = inst.k();
  const double budget = inst.budget();

  RlaOutcome out(k);
  out.laa = RunLaa(inst, f, options.tie_break);
  out.gamma = out.laa.result.value;
  const std::vector<double> guesses = GuessSet(out.gamma, eps);

  std::vector<CountingOracle::Cursor> cursors;
  cursors.reserve(guesses.size());
  for (double v : guesses) {
    cursors.push_back(f.Open());
    RlaGuess g(k);
    g.v = v;
    g.tau = 2.0 * v / (5.0 * budget);
    if (options.record_traces) g.trace.reserve(inst.n());
    out.guesses.push_back(std::move(g));
  }

  for (std::size_t j = 0; j < inst.n(); ++j) {
    const ElementId e = inst.universe()[j];
    const double c = inst.costs()[j];
    for (std::size_t g = 0; g < guesses.size(); ++g) {
      CountingOracle::Cursor& s = cursors[g];
      RlaGuess& guess = out.guesses[g];
      Position best_pos = kUnassigned;
      double best_gain = -std::numeric_limits<double>::infinity();
      for (Position i = 1; i <= k; ++i) {
        double gain = s.Gain(e, i);
        bool better = options.tie_break == TieBreak::kLowestPosition
                          ? gain > best_gain
                          : gain >= best_gain;
        if (best_pos == kUnassigned || better) {
          best_pos = i;
          best_gain = gain;
        }
      }
      const bool budget_ok = guess.cost + c <= budget;
      const bool accept = budget_ok && best_gain / c >= guess.tau;
      if (accept) {
        s.Add(e, best_pos);
        guess.cost += c;
      }
      if (options.record_traces) {
        TraceEvent ev;
        ev.element = e;
        ev.chosen_position = best_pos;
        ev.singleton_value = std::numeric_limits<double>::quiet_NaN();
        ev.marginal = best_gain;
        ev.threshold = guess.tau;
        ev.budget_ok = budget_ok;
        ev.accepted = accept;
        ev.running_cost = guess.cost;
        ev.running_value = s.value();
        guess.trace.push_back(ev);
      }
    }
  }

  // Candidates in order s_b, best singleton, s_v ascending in v; the first
  // strict maximum wins.
  const KSet* best = &out.laa.result.solution;
  double best_value = out.gamma;
  out.chosen = "s_b";
  KSet singleton(k);
  singleton.Insert(out.laa.best_singleton.element,
                   out.laa.best_singleton.position);
  if (out.laa.best_singleton_value > best_value) {
    best = &singleton;
    best_value = out.laa.best_singleton_value;
    out.chosen = "singleton";
  }
  for (std::size_t g = 0; g < guesses.size(); ++g) {
    out.guesses[g].solution = cursors[g].current();
    out.guesses[g].value = cursors[g].value();
    if (out.guesses[g].value > best_value) {
      best = &out.guesses[g].solution;
      best_value = out.guesses[g].value;
      out.chosen = "guess";
      out.chosen_guess = g;
    }
  }

  out.result.solution = *best;
  out.result.queries = f.queries() - queries_before;
  out.result.wall_time = std::chrono::duration_cast<std::chrono::nanoseconds>(
      std::chrono::steady_clock::now() - start);
  out.result.value = f.objective().Evaluate(out.result.solution);
  out.result.cost = TotalCost(out.result.solution, inst);
  out.result.algorithm = "rla";
  out.result.params = {{"B", FormatDouble(budget)},
                       {"k", std::to_string(k)},
                       {"n", std::to_string(inst.n())},
                       {"epsilon", FormatDouble(eps)},
                       {"guesses", std::to_string(guesses.size())}};
  return out;
}

}  // namespace ksub
