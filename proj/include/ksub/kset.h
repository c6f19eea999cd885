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

#ifndef KSUB_KSET_H_
#define KSUB_KSET_H_

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace ksub {

using ElementId = std::uint32_t;

// 1-based slot index in [1, k]; 0 means "unassigned".
using Position = int;
inline constexpr Position kUnassigned = 0;

struct Tuple {
  ElementId element = 0;
  Position position = kUnassigned;

  friend bool operator==(const Tuple&, const Tuple&) = default;
};

// A k-set over an arbitrary ground set.
//
// Stored as a map element -> position rather than as k explicit subsets
// (X_1, ..., X_k). The two forms are equivalent: X_i is the preimage of i,
// and pairwise disjointness of the X_i holds because a map assigns at most
// one position per element. Iteration is in ascending element id.
class KSet {
 public:
  using const_iterator = std::map<ElementId, Position>::const_iterator;

  explicit KSet(int k);

  // Builds from explicit tuples; throws like Insert on bad input.
  KSet(int k, const std::vector<Tuple>& tuples);

  int k() const { return k_; }
  std::size_t size() const { return assignment_.size(); }
  bool empty() const { return assignment_.empty(); }

  // x(e): the position of e, or kUnassigned.
  Position at(ElementId e) const;
  bool contains(ElementId e) const { return assignment_.count(e) != 0; }

  // In-place x <- x ⊔ (e, i). Throws kElementAlreadyAssigned or
  // kPositionOutOfRange.
  void Insert(ElementId e, Position i);
  // Unassigns e; no-op when e is not in the support.
  void Erase(ElementId e) { assignment_.erase(e); }

  // Elements of X_i in ascending order.
  std::vector<ElementId> Subset(Position i) const;
  std::vector<ElementId> Support() const;

  const_iterator begin() const { return assignment_.begin(); }
  const_iterator end() const { return assignment_.end(); }

  std::string ToString() const;

  friend bool operator==(const KSet&, const KSet&) = default;

 private:
  int k_;
  std::map<ElementId, Position> assignment_;
};

// x ⊔ (e, i) as a new value; x is untouched.
KSet Assign(const KSet& x, ElementId e, Position i);

// Z_i = X_i ∪ Y_i minus every element that either operand places elsewhere.
// An element placed at different positions by x and y lands in no Z_i.
KSet Join(const KSet& x, const KSet& y);

// (X_1 ∩ Y_1, ..., X_k ∩ Y_k).
KSet Meet(const KSet& x, const KSet& y);

// x ⊑ y: X_i ⊆ Y_i for every i.
bool IsSubKSet(const KSet& x, const KSet& y);

}  // namespace ksub

#endif  // KSUB_KSET_H_
