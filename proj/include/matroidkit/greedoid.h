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

// Greedoids: set systems with the empty set and the augmentation property,
// but without downward closure. GreedoidGreedy grows a feasible set one best
// candidate at a time and is optimal for every order and modular weight
// exactly on greedoids with the strong exchange property.

#ifndef MATROIDKIT_GREEDOID_H_
#define MATROIDKIT_GREEDOID_H_

#include <optional>
#include <string>

#include "matroidkit/core.h"
#include "matroidkit/greedy.h"

namespace matroidkit {

// Modular set weights c(A) = sum of per-element values, with c({}) = 0.
using ModularWeight = WeightFn;

struct GreedoidViolation {
  std::string property;
  ElementSet first;
  ElementSet second;
};

struct GreedoidReport {
  bool is_set_system = false;
  bool has_empty = false;
  bool has_m3 = false;
  bool is_greedoid = false;
  bool is_accessible = false;
  bool is_antimatroid = false;
  // Only evaluated for greedoids.
  std::optional<bool> has_sep;
  // First failing property, in the order the fields are listed above.
  std::optional<GreedoidViolation> violation;
};

GreedoidReport ClassifyGreedoid(const ExplicitSetSystem& sys);

// For all feasible A inside a basis B and x outside B with A + x feasible,
// some y in B - A has A + y and B - y + x feasible. Requires a greedoid.
bool HasStrongExchangeProperty(const ExplicitSetSystem& sys);

// An ordering of x whose every prefix is feasible; the lexicographically
// smallest such ordering. Throws InputError if x is not feasible and
// ContractError if no ordering exists.
Order AccessibleOrdering(const ExplicitSetSystem& sys, const ElementSet& x);

// The earliest element in `order` of maximal singleton weight among those
// outside x that keep x feasible. Only elements outside x are examined.
std::optional<Index> FindBestCandidate(const OracleSystem& sys,
                                       const ModularWeight& cost,
                                       const Order& order, const ElementSet& x);

// Starts from the empty set and inserts best candidates until none remain.
ElementSet GreedoidGreedy(const OracleSystem& sys, const ModularWeight& cost,
                          const Order& order);

}  // namespace matroidkit

#endif  // MATROIDKIT_GREEDOID_H_
