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
namespace {

// (k+1)^n, saturating at cap + 1.
std::uint64_t AssignmentCount(std::size_t n, int k, std::uint64_t cap) {
  std::uint64_t total = 1;
  for (std::size_t j = 0; j < n; ++j) {
    if (total > cap / static_cast<std::uint64_t>(k + 1)) return cap + 1;
    total *= static_cast<std::uint64_t>(k + 1);
  }
  return total;
}

struct Enumerator {
  const KnapsackInstance& inst;
  const Objective& f;
  KSet current;
  std::uint64_t evaluated = 0;
  bool have_best = false;
  double best_value = 0.0;
  KSet best;

  // Depth-first in universe order with position 0 tried first visits the
  // assignment vectors in lexicographic order.
  void Visit(std::size_t depth, double cost) {
    if (depth == inst.n()) {
      double v = f.Evaluate(current);
      ++evaluated;
      if (!have_best || v > best_value) {
        have_best = true;
        best_value = v;
        best = current;
      }
      return;
    }
    Visit(depth + 1, cost);
    const ElementId e = inst.universe()[depth];
    const double c = inst.costs()[depth];
    if (cost + c > inst.budget()) return;
    for (Position i = 1; i <= inst.k(); ++i) {
      current.Insert(e, i);
      Visit(depth + 1, cost + c);
      current.Erase(e);
    }
  }
};

}  // namespace

RunResult BruteForceOpt(const KnapsackInstance& inst, const Objective& f,
                        std::uint64_t max_enum) {
  const std::uint64_t count = AssignmentCount(inst.n(), inst.k(), max_enum);
  if (count > max_enum) {
    throw Error(ErrorCode::kInstanceTooLarge,
                "(k+1)^n exceeds the enumeration cap " +
                    std::to_string(max_enum));
  }
  if (f.k() != inst.k()) {
    throw Error(ErrorCode::kMismatchedK, "objective and instance disagree on k");
  }
  const auto start = std::chrono::steady_clock::now();
  Enumerator en{inst, f, KSet(inst.k()), 0, false, 0.0, KSet(inst.k())};
  en.Visit(0, 0.0);

  RunResult out(inst.k());
  out.solution = en.best;
  out.value = en.best_value;
  out.cost = TotalCost(out.solution, inst);
  out.queries = en.evaluated;
  out.wall_time = std::chrono::duration_cast<std::chrono::nanoseconds>(
      std::chrono::steady_clock::now() - start);
  out.algorithm = "brute";
  out.params = {{"B", FormatDouble(inst.budget())},
                {"k", std::to_string(inst.k())},
                {"n", std::to_string(inst.n())}};
  return out;
}

}  // namespace ksub
