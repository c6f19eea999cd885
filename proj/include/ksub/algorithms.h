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

#ifndef KSUB_ALGORITHMS_H_
#define KSUB_ALGORITHMS_H_

#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ksub/instance.h"
#include "ksub/kset.h"
#include "ksub/objective.h"

namespace ksub {

// Which position wins when several give the same value in an argmax over
// [k]. Best-singleton updates always require strict improvement.
enum class TieBreak { kLowestPosition, kHighestPosition };

struct RunResult {
  explicit RunResult(int k) : solution(k) {}

  KSet solution;
  // f(solution), re-evaluated once after the run and not counted.
  double value = 0.0;
  double cost = 0.0;
  std::uint64_t queries = 0;
  std::chrono::nanoseconds wall_time{0};
  std::string algorithm;
  std::map<std::string, std::string> params;
};

// One streamed element as seen by a threshold pass.
struct TraceEvent {
  ElementId element = 0;
  Position chosen_position = kUnassigned;
  // LAA: f((e, i_e)). Unused (NaN) in RLA guess traces.
  double singleton_value = 0.0;
  // Δ_(e, i_e) f(x) when the acceptance test was evaluated.
  std::optional<double> marginal;
  // The right-hand side the test compared against: c(e) f(x) / B for LAA,
  // τ_v for RLA (compared with marginal / c(e)).
  std::optional<double> threshold;
  bool budget_ok = true;
  bool accepted = false;
  // Cost and value of the running solution after the decision.
  double running_cost = 0.0;
  double running_value = 0.0;
};

struct LaaOutcome {
  explicit LaaOutcome(int k) : result(k), packed(k) {}

  RunResult result;
  std::vector<TraceEvent> trace;
  // Tuples appended to x, in acceptance order; f(x^t) is full_value.
  std::vector<Tuple> accepted;
  double full_value = 0.0;
  // x': the longest affordable suffix of `accepted`.
  KSet packed;
  double packed_value = 0.0;
  Tuple best_singleton;
  double best_singleton_value = 0.0;
  bool chose_singleton = false;
};

struct RlaGuess {
  explicit RlaGuess(int k) : solution(k) {}

  double v = 0.0;
  double tau = 0.0;
  KSet solution;
  double value = 0.0;
  double cost = 0.0;
  std::vector<TraceEvent> trace;
};

struct RlaOutcome {
  explicit RlaOutcome(int k) : result(k), laa(k) {}

  RunResult result;
  LaaOutcome laa;
  double gamma = 0.0;
  std::vector<RlaGuess> guesses;
  // "s_b", "singleton", or "guess" (then chosen_guess indexes guesses).
  std::string chosen;
  std::size_t chosen_guess = 0;
};

// Single pass threshold algorithm with suffix packing; 1/19-approximate for
// nonnegative k-submodular f. `inst` must be normalized and nonempty.
LaaOutcome RunLaa(const KnapsackInstance& inst, CountingOracle& f,
                  TieBreak tie_break = TieBreak::kLowestPosition);

// Number j of trailing tuples kept by suffix packing: the largest j whose
// suffix cost fits in B.
std::size_t SuffixLength(std::span<const Tuple> seq,
                         const KnapsackInstance& inst);
KSet SuffixPack(std::span<const Tuple> seq, const KnapsackInstance& inst);

// {(1+eps)^i : i integer, gamma <= (1+eps)^i <= 19 gamma}, ascending. Empty
// for gamma <= 0.
std::vector<double> GuessSet(double gamma, double epsilon);

struct RlaOptions {
  double epsilon = 0.1;
  TieBreak tie_break = TieBreak::kLowestPosition;
  bool record_traces = true;
};

// LAA bootstrap followed by one pass running a density-threshold candidate
// per guess v. (1/5 - eps)-approximate. Throws kEpsilonOutOfRange unless
// 0 < eps < 1/5.
RlaOutcome RunRla(const KnapsackInstance& inst, CountingOracle& f,
                  const RlaOptions& options = {});

inline constexpr std::uint64_t kDefaultEnumerationCap = 5'000'000;

// Exact optimum by enumerating all (k+1)^n assignments; ties go to the
// lexicographically smallest assignment vector (universe order, position 0
// first). Throws kInstanceTooLarge when (k+1)^n exceeds `max_enum`.
// `queries` reports the number of feasible assignments evaluated.
RunResult BruteForceOpt(const KnapsackInstance& inst, const Objective& f,
                        std::uint64_t max_enum = kDefaultEnumerationCap);

// Repeatedly adds the affordable (e, i) with the best marginal gain per unit
// cost while that gain is positive.
RunResult GreedyBaseline(const KnapsackInstance& inst, CountingOracle& f);

struct SolverParams {
  double epsilon = 0.1;
  TieBreak tie_break = TieBreak::kLowestPosition;
  std::uint64_t max_enum = kDefaultEnumerationCap;
};

using Solver = std::function<RunResult(const KnapsackInstance&,
                                       CountingOracle&, const SolverParams&)>;

// Name -> solver table used by the benchmark harness. "laa", "rla",
// "greedy" and "brute" are built in; further strategies can be registered.
class SolverRegistry {
 public:
  static SolverRegistry& Global();

  void Register(std::string name, Solver solver);
  bool Has(std::string_view name) const;
  std::vector<std::string> Names() const;

  // Normalizes the instance first; an instance where every element exceeds
  // the budget yields the empty k-set with value 0.
  RunResult Run(std::string_view name, const KnapsackInstance& inst,
                CountingOracle& f, const SolverParams& params) const;

 private:
  SolverRegistry();
  std::map<std::string, Solver, std::less<>> solvers_;
};

}  // namespace ksub

#endif  // KSUB_ALGORITHMS_H_
