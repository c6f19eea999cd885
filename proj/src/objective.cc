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

#include "ksub/objective.h"

#include <algorithm>
#include <string>

#include "ksub/error.h"

namespace ksub {
namespace {

class RecomputingState : public ObjectiveState {
 public:
  explicit RecomputingState(const Objective& f) : f_(f), current_(f.k()) {}

  const KSet& current() const override { return current_; }
  double value() const override { return value_; }

  double ValueWith(ElementId e, Position i) override {
    double v = f_.Evaluate(Assign(current_, e, i));
    if (!probed_.empty() && probed_.back().first.element != e) probed_.clear();
    probed_.emplace_back(Tuple{e, i}, v);
    return v;
  }

  // Reuses a probed value so that f is evaluated exactly as often as the
  // counting oracle charges.
  void Add(ElementId e, Position i) override {
    current_.Insert(e, i);
    auto it = std::find_if(probed_.begin(), probed_.end(), [&](const auto& p) {
      return p.first == Tuple{e, i};
    });
    value_ = it != probed_.end() ? it->second : f_.Evaluate(current_);
    probed_.clear();
  }

 private:
  const Objective& f_;
  KSet current_;
  double value_ = 0.0;
  std::vector<std::pair<Tuple, double>> probed_;
};

}  // namespace

std::unique_ptr<ObjectiveState> Objective::Start() const {
  return std::make_unique<RecomputingState>(*this);
}

void Objective::CheckArgument(const KSet& x) const {
  if (x.k() != k()) {
    throw Error(ErrorCode::kMismatchedK,
                "objective has k=" + std::to_string(k()) + ", argument has k=" +
                    std::to_string(x.k()));
  }
  for (const auto& [e, p] : x) {
    if (!Contains(e)) {
      throw Error(ErrorCode::kUnknownElement,
                  "element " + std::to_string(e) + " outside the ground set");
    }
  }
}

void Objective::CheckExtension(const KSet& x, ElementId e, Position i) const {
  if (x.contains(e)) {
    throw Error(ErrorCode::kElementAlreadyAssigned,
                "element " + std::to_string(e) + " already assigned");
  }
  if (i < 1 || i > k()) {
    throw Error(ErrorCode::kPositionOutOfRange,
                "position " + std::to_string(i) + " not in [1, " +
                    std::to_string(k()) + "]");
  }
  if (!Contains(e)) {
    throw Error(ErrorCode::kUnknownElement,
                "element " + std::to_string(e) + " outside the ground set");
  }
}

double CountingOracle::Evaluate(const KSet& x) {
  double v = f_->Evaluate(x);
  Charge();
  return v;
}

double CountingOracle::MarginalGain(const KSet& x, ElementId e, Position i) {
  KSet extended = Assign(x, e, i);
  double fx = f_->Evaluate(x);
  double fxe = f_->Evaluate(extended);
  Charge(2);
  return fxe - fx;
}

double CountingOracle::MarginalGain(const KSet& x, double fx, ElementId e,
                                    Position i) {
  double fxe = f_->Evaluate(Assign(x, e, i));
  Charge();
  return fxe - fx;
}

CountingOracle::Cursor CountingOracle::Open() {
  return Cursor(this, f_->Start());
}

double CountingOracle::Cursor::ValueWith(ElementId e, Position i) {
  double v = state_->ValueWith(e, i);
  oracle_->Charge();
  if (!probes_.empty() && probes_.back().element != e) probes_.clear();
  probes_.push_back(Tuple{e, i});
  return v;
}

void CountingOracle::Cursor::Add(ElementId e, Position i) {
  bool paid = std::find(probes_.begin(), probes_.end(), Tuple{e, i}) !=
              probes_.end();
  state_->Add(e, i);
  if (!paid) oracle_->Charge();
  probes_.clear();
}

}  // namespace ksub
