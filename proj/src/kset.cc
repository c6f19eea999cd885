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

#include <sstream>

#include "ksub/error.h"

namespace ksub {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kElementAlreadyAssigned: return "ElementAlreadyAssigned";
    case ErrorCode::kPositionOutOfRange: return "PositionOutOfRange";
    case ErrorCode::kMismatchedK: return "MismatchedK";
    case ErrorCode::kUnknownElement: return "UnknownElement";
    case ErrorCode::kEmptyUniverse: return "EmptyUniverse";
    case ErrorCode::kInvalidInstance: return "InvalidInstance";
    case ErrorCode::kPairwiseViolation: return "PairwiseViolation";
    case ErrorCode::kInstanceTooLarge: return "InstanceTooLarge";
    case ErrorCode::kEpsilonOutOfRange: return "EpsilonOutOfRange";
    case ErrorCode::kTraceMismatch: return "TraceMismatch";
    case ErrorCode::kSingularCovariance: return "SingularCovariance";
    case ErrorCode::kUnknownNode: return "UnknownNode";
    case ErrorCode::kMalformedLine: return "MalformedLine";
    case ErrorCode::kWeightOutOfRange: return "WeightOutOfRange";
    case ErrorCode::kNoUsableRows: return "NoUsableRows";
    case ErrorCode::kInvalidConfig: return "InvalidConfig";
    case ErrorCode::kIo: return "Io";
  }
  return "Unknown";
}

namespace {

void CheckSameK(const KSet& x, const KSet& y) {
  if (x.k() != y.k()) {
    throw Error(ErrorCode::kMismatchedK, "k-sets with k=" +
                                             std::to_string(x.k()) + " and k=" +
                                             std::to_string(y.k()));
  }
}

}  // namespace

KSet::KSet(int k) : k_(k) {
  if (k < 1) {
    throw Error(ErrorCode::kPositionOutOfRange,
                "k must be positive, got " + std::to_string(k));
  }
}

KSet::KSet(int k, const std::vector<Tuple>& tuples) : KSet(k) {
  for (const Tuple& t : tuples) Insert(t.element, t.position);
}

Position KSet::at(ElementId e) const {
  auto it = assignment_.find(e);
  return it == assignment_.end() ? kUnassigned : it->second;
}

void KSet::Insert(ElementId e, Position i) {
  if (i < 1 || i > k_) {
    throw Error(ErrorCode::kPositionOutOfRange,
                "position " + std::to_string(i) + " not in [1, " +
                    std::to_string(k_) + "]");
  }
  auto [it, inserted] = assignment_.emplace(e, i);
  if (!inserted) {
    throw Error(ErrorCode::kElementAlreadyAssigned,
                "element " + std::to_string(e) + " already at position " +
                    std::to_string(it->second));
  }
}

std::vector<ElementId> KSet::Subset(Position i) const {
  std::vector<ElementId> out;
  for (const auto& [e, p] : assignment_) {
    if (p == i) out.push_back(e);
  }
  return out;
}

std::vector<ElementId> KSet::Support() const {
  std::vector<ElementId> out;
  out.reserve(assignment_.size());
  for (const auto& [e, p] : assignment_) out.push_back(e);
  return out;
}

std::string KSet::ToString() const {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (const auto& [e, p] : assignment_) {
    if (!first) os << ",";
    first = false;
    os << "(" << e << "," << p << ")";
  }
  os << "}";
  return os.str();
}

KSet Assign(const KSet& x, ElementId e, Position i) {
  KSet out = x;
  out.Insert(e, i);
  return out;
}

KSet Join(const KSet& x, const KSet& y) {
  CheckSameK(x, y);
  KSet out(x.k());
  auto xi = x.begin();
  auto yi = y.begin();
  // Merge walk over the two sorted supports.
  while (xi != x.end() || yi != y.end()) {
    if (yi == y.end() || (xi != x.end() && xi->first < yi->first)) {
      out.Insert(xi->first, xi->second);
      ++xi;
    } else if (xi == x.end() || yi->first < xi->first) {
      out.Insert(yi->first, yi->second);
      ++yi;
    } else {
      if (xi->second == yi->second) out.Insert(xi->first, xi->second);
      ++xi;
      ++yi;
    }
  }
  return out;
}

KSet Meet(const KSet& x, const KSet& y) {
  CheckSameK(x, y);
  KSet out(x.k());
  for (const auto& [e, p] : x) {
    if (y.at(e) == p) out.Insert(e, p);
  }
  return out;
}

bool IsSubKSet(const KSet& x, const KSet& y) {
  CheckSameK(x, y);
  for (const auto& [e, p] : x) {
    if (y.at(e) != p) return false;
  }
  return true;
}

}  // namespace ksub
