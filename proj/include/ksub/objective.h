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

#ifndef KSUB_OBJECTIVE_H_
#define KSUB_OBJECTIVE_H_

#include <atomic>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "ksub/kset.h"

namespace ksub {

// A running k-set together with its objective value. Objectives that can
// extend a solution cheaply (coverage counters, Cholesky factors, frozen
// Monte Carlo cascades) override Objective::Start; everything else gets a
// state that re-evaluates from scratch.
class ObjectiveState {
 public:
  virtual ~ObjectiveState() = default;

  virtual const KSet& current() const = 0;
  virtual double value() const = 0;

  // f(current ⊔ (e, i)); the state itself is unchanged.
  virtual double ValueWith(ElementId e, Position i) = 0;

  // current <- current ⊔ (e, i).
  virtual void Add(ElementId e, Position i) = 0;
};

// A normalized set function over k-sets: Evaluate(empty) == 0 and results
// depend only on the argument.
class Objective {
 public:
  virtual ~Objective() = default;

  virtual int k() const = 0;

  // Whether e belongs to the objective's ground set.
  virtual bool Contains(ElementId e) const = 0;

  // Throws kUnknownElement for elements outside the ground set and
  // kMismatchedK when x.k() != k().
  virtual double Evaluate(const KSet& x) const = 0;

  virtual std::unique_ptr<ObjectiveState> Start() const;

 protected:
  // Shared precondition check for Evaluate/ValueWith implementations.
  void CheckArgument(const KSet& x) const;
  void CheckExtension(const KSet& x, ElementId e, Position i) const;
};

// Counts every evaluation of f, whichever route (full or incremental) it
// takes. The counter is atomic so one oracle may be shared, but the library
// itself uses one oracle per algorithm run.
class CountingOracle {
 public:
  class Cursor;

  explicit CountingOracle(const Objective& f) : f_(&f) {}
  CountingOracle(const CountingOracle&) = delete;
  CountingOracle& operator=(const CountingOracle&) = delete;

  const Objective& objective() const { return *f_; }
  int k() const { return f_->k(); }

  double Evaluate(const KSet& x);

  // f(x ⊔ (e,i)) - f(x). Two queries.
  double MarginalGain(const KSet& x, ElementId e, Position i);
  // Same, with f(x) already known to the caller. One query.
  double MarginalGain(const KSet& x, double fx, ElementId e, Position i);

  std::uint64_t queries() const {
    return queries_.load(std::memory_order_relaxed);
  }
  void ResetCounter() { queries_.store(0, std::memory_order_relaxed); }

  // An incremental view starting at the empty k-set. Its value() is the
  // cached f(current) and costs nothing.
  Cursor Open();

 private:
  void Charge(std::uint64_t n = 1) {
    queries_.fetch_add(n, std::memory_order_relaxed);
  }

  const Objective* f_;
  std::atomic<std::uint64_t> queries_{0};
};

class CountingOracle::Cursor {
 public:
  const KSet& current() const { return state_->current(); }
  double value() const { return state_->value(); }

  // f(current ⊔ (e,i)); one query.
  double ValueWith(ElementId e, Position i);
  // Δ_(e,i) f(current); one query.
  double Gain(ElementId e, Position i) { return ValueWith(e, i) - value(); }

  // Commits (e,i). Free when (e,i) was among the probes of the most
  // recently probed element since the last commit, since its value was
  // already paid for; otherwise one query.
  void Add(ElementId e, Position i);

 private:
  friend class CountingOracle;
  Cursor(CountingOracle* oracle, std::unique_ptr<ObjectiveState> state)
      : oracle_(oracle), state_(std::move(state)) {}

  CountingOracle* oracle_;
  std::unique_ptr<ObjectiveState> state_;
  std::vector<Tuple> probes_;
};

}  // namespace ksub

#endif  // KSUB_OBJECTIVE_H_
